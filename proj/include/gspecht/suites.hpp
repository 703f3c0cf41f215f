#pragma once

// Verification drivers shared by the CLI and the acceptance runner.  Each
// returns a JSON fragment whose check objects carry "ok"; nothing here prints.

#include <cstdint>
#include <exception>
#include <random>
#include <string>
#include <vector>

#include "gspecht/characters.hpp"
#include "gspecht/hecke.hpp"
#include "gspecht/klr.hpp"
#include "gspecht/parallel.hpp"
#include "gspecht/report.hpp"
#include "gspecht/specht.hpp"

namespace gspecht {

struct SuiteSelection {
  bool hecke = false;
  bool specht = false;
  bool klr = false;
  bool branching = false;
  bool any() const { return hecke || specht || klr || branching; }
};

struct AlgebraRunOptions {
  SuiteSelection suites;
  int assoc_trials = 100;
  std::uint64_t seed = 1;
  std::size_t max_dim = HeckeAlgebra::default_max_dim;
  std::size_t word_cap = 60;
  unsigned threads = 1;
};

inline Json params_json(const AlgebraParams& params) {
  Json j{{"e", params.e()}, {"charge", params.charge}};
  if (params.field.mode == FieldSpec::Mode::prime) {
    j["p"] = params.field.p;
    j["xi"] = params.field.xi;
  }
  return j;
}

namespace detail {

inline CheckResult failed(const std::string& name, const std::string& why) { return CheckResult(name, false, why); }

inline void append(Json& a, const std::vector<CheckResult>& rs) {
  for (auto& r : rs) a.push_back(to_json(r));
}

// Everything computed for one shape; runs on a worker thread.
inline Json shape_report(const CellularBasis& cb, const Multipartition& mu, const AlgebraRunOptions& o, std::uint64_t seed) {
  const auto& params = cb.algebra().params();
  Json out{{"mu", mu.to_string()}};
  Json specht = Json::array(), klr = Json::array(), branching = Json::array();
  const std::size_t expected = standard_tableaux(mu).size();
  out["tableaux"] = expected;
  try {
    SpechtConstruction sc(cb, mu);
    const auto& m = sc.module();
    out["dim"] = m.dim();
    if (o.suites.specht) {
      specht.push_back(to_json(CheckResult("dim S(mu) = #T(mu)", m.dim() == expected,
                                           m.dim() == expected ? "" : std::to_string(m.dim()))));
      append(specht, check_initial_eigenvalues(m));
      append(specht, check_module_relations(m));
      specht.push_back(to_json(sc.check_straightening()));
    }
    if (o.suites.klr || o.suites.branching) {
      auto g = graded_specht(m);
      if (o.suites.klr) {
        append(klr, verify_klr_relations(g));
        klr.push_back(to_json(check_unitriangular(g)));
        append(klr, verify_homogeneity(g));
        klr.push_back(to_json(verify_reduced_word_independence(g, o.word_cap)));
        CheckResult wd("weight dimensions match the graded character");
        try {
          auto got = graded_weight_dimensions(g);
          auto want = graded_character(mu, params);
          std::erase_if(got, [](const auto& kv) { return kv.second.is_zero(); });
          wd.instances = want.size();
          if (got != want) {
            wd.ok = false;
            wd.detail = "matrix and combinatorial characters differ";
          }
        } catch (const std::exception& e) {
          wd = failed(wd.name, e.what());
        }
        klr.push_back(to_json(wd));
        // the whole construction again, with v_T built from random reduced words
        std::mt19937_64 rng(seed);
        auto g2 = graded_specht(m, [&](const Permutation& w) { return random_reduced_word(w, rng); });
        CheckResult rw("random reduced words: unitriangular and homogeneous");
        rw.instances = g2.dim();
        auto rs = verify_homogeneity(g2);
        rs.push_back(check_unitriangular(g2));
        for (auto& r : rs)
          if (!r.ok) rw = failed(rw.name, r.name + ": " + r.detail);
        klr.push_back(to_json(rw));
      }
      if (o.suites.branching) {
        branching.push_back(to_json(check_branching_identity(mu, params)));
        append(branching, verify_branching_filtration(g));
      }
    }
  } catch (const ConventionError& e) {
    auto bad = to_json(failed("construction", e.what()));
    for (Json* a : {&specht, &klr, &branching}) a->push_back(bad);
  }
  if (o.suites.specht) out["specht"] = std::move(specht);
  if (o.suites.klr) out["klr"] = std::move(klr);
  if (o.suites.branching) out["branching"] = std::move(branching);
  return out;
}

}  // namespace detail

/// Algebra suites at one (params, d).  Throws ResourceError if H is too big.
inline Json run_algebra_point(const AlgebraParams& params, int d, const AlgebraRunOptions& o) {
  Json out = params_json(params);
  out["d"] = d;
  HeckeAlgebra h(params, d, o.max_dim);
  out["dim"] = h.dim();
  if (o.suites.hecke) {
    Json checks = Json::array();
    detail::append(checks, h.check_relations());
    detail::append(checks, h.check_products(o.assoc_trials, o.seed));
    out["hecke"] = std::move(checks);
  }
  if (!(o.suites.specht || o.suites.klr || o.suites.branching)) return out;

  CellularBasis cb(h);
  const auto& shapes = cb.shapes();
  auto reports = parallel_map(shapes.size(), o.threads, [&](std::size_t k) {
    return detail::shape_report(cb, shapes[k], o, o.seed + 7919 * (k + 1));
  });
  if (o.suites.specht) {
    std::size_t sum = 0;
    for (auto& r : reports) sum += r["tableaux"].get<std::size_t>() * r["tableaux"].get<std::size_t>();
    out["sum_of_squares"] = to_json(CheckResult("sum of (#T(mu))^2 = dim H", sum == h.dim(), std::to_string(sum)));
  }
  out["shapes"] = std::move(reports);
  return out;
}

/// Combinatorial identities for every charge in `charges` (all of one level),
/// over all multipartitions up to dmax; charge-free checks run once.
inline Json run_combinatorics(int e, const std::vector<std::vector<int>>& charges, int dmax, unsigned threads,
                              int bruhat_dmax = -1) {
  if (charges.empty()) throw ParameterError("run_combinatorics: no charges");
  const int level = static_cast<int>(charges.front().size());
  TableauCatalog cat(level, dmax);
  Json out{{"e", e}, {"level", level}, {"dmax", dmax}, {"tableaux", cat.entries().size()}};
  out["adjacency"] = to_json(adjacency_suite(cat));
  if (bruhat_dmax >= 0) out["bruhat"] = to_json(bruhat_crosscheck(level, bruhat_dmax));
  out["charges"] = parallel_map(charges.size(), threads, [&](std::size_t k) {
    auto params = AlgebraParams::combinatorial(e, charges[k]);
    return Json{{"charge", charges[k]}, {"checks", to_json(defect_suite(cat, params))}};
  });
  return out;
}

/// `count` charges of the given level: residues mod e, or integers in [-3, 3] when e = 0.
inline std::vector<std::vector<int>> random_charges(int e, int level, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(e == 0 ? -3 : 0, e == 0 ? 3 : e - 1);
  std::vector<std::vector<int>> out;
  for (int k = 0; k < count; ++k) {
    std::vector<int> c(static_cast<std::size_t>(level));
    for (auto& x : c) x = pick(rng);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace gspecht
