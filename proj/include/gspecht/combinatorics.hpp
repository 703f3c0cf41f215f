#pragma once

#include "gspecht/combinatorics/multipartition.hpp"
#include "gspecht/combinatorics/params.hpp"
#include "gspecht/combinatorics/permutation.hpp"
#include "gspecht/combinatorics/tableau.hpp"
