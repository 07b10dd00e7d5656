#pragma once

// JSON documents for instances, certificates and run results.

#include <nlohmann/json.hpp>

#include <string>

#include "gmvi/diagnostics.hpp"
#include "gmvi/problems.hpp"
#include "gmvi/solvers.hpp"

namespace gmvi {

using nlohmann::json;

/// {name, family, n, seed, matrix?, offset?}; matrices are row-major arrays
/// of rows. seed is null for the deterministic families.
inline json instance_to_json(const ProblemInstance& inst) {
  json j;
  j["name"] = inst.name;
  j["family"] = std::string(to_string(inst.family));
  j["n"] = inst.n;
  j["seed"] = inst.seed ? json(*inst.seed) : json(nullptr);
  if (inst.is_affine()) {
    const auto& op = inst.affine();
    json rows = json::array();
    for (Index i = 0; i < op.matrix().rows(); ++i) {
      json row = json::array();
      for (Index c = 0; c < op.matrix().cols(); ++c) row.push_back(op.matrix()(i, c));
      rows.push_back(std::move(row));
    }
    j["matrix"] = std::move(rows);
    j["offset"] = std::vector<double>(op.offset().data(), op.offset().data() + op.dimension());
  }
  return j;
}

namespace detail {

inline Monotonicity family_monotonicity(Family f) {
  return (f == Family::SUN || f == Family::MHPH) ? Monotonicity::Monotone : Monotonicity::Unknown;
}

}  // namespace detail

/// Inverse of instance_to_json. When matrix/offset are absent the instance is
/// regenerated from its family, n, seed (and the WAT index in the name).
inline ProblemInstance instance_from_json(const json& j) {
  try {
    const Family family = parse_family(j.at("family").get<std::string>());
    const std::string name = j.at("name").get<std::string>();
    const Index n = j.at("n").get<Index>();
    std::optional<std::uint64_t> seed;
    if (j.contains("seed") && !j.at("seed").is_null()) seed = j.at("seed").get<std::uint64_t>();

    if (family == Family::KS) return make_kojima_shindo();
    if (j.contains("matrix") && j.contains("offset")) {
      const auto rows = j.at("matrix").get<std::vector<std::vector<double>>>();
      const auto off = j.at("offset").get<std::vector<double>>();
      require(static_cast<Index>(rows.size()) == n && static_cast<Index>(off.size()) == n,
              "instance_from_json: matrix/offset size does not match n");
      Matrix A(n, n);
      for (Index r = 0; r < n; ++r) {
        require(static_cast<Index>(rows[r].size()) == n, "instance_from_json: ragged matrix");
        for (Index c = 0; c < n; ++c) A(r, c) = rows[r][c];
      }
      ProblemInstance inst{name, n, AffineOperator(std::move(A), Vector(Eigen::Map<const Vector>(off.data(), n))),
                           family, seed, detail::family_monotonicity(family)};
      return inst;
    }
    switch (family) {
      case Family::WAT: return make_watson(std::stoi(name.substr(3)));
      case Family::SUN: return make_sun(n);
      case Family::MHPH:
        require(seed.has_value(), "instance_from_json: MHPH needs a seed");
        return make_mhph(n, *seed);
      case Family::RG:
        require(seed.has_value(), "instance_from_json: RG needs a seed");
        return make_rg(n, *seed);
      default: break;
    }
    throw InvalidArgument("instance_from_json: custom instance without matrix/offset");
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("instance_from_json: ") + e.what());
  }
}

/// {eps, tilde_gap, residual_norm, gamma}
inline json certificate_to_json(const Certificate& c) {
  json j{{"eps", c.eps},
         {"tilde_gap", c.tilde_gap_value},
         {"residual_norm", c.residual_norm},
         {"gamma", c.gamma}};
  if (c.eps_bound) j["eps_bound"] = *c.eps_bound;
  return j;
}

inline json run_result_to_json(const RunResult& r, bool include_trace = false) {
  json j;
  j["status"] = std::string(to_string(r.status));
  if (!r.message.empty()) j["message"] = r.message;
  j["k"] = r.k;
  j["np"] = r.np;
  j["wall_seconds"] = r.wall_seconds;
  j["final_gap"] = r.final_gap;
  const Vector& x = r.x_final.coords();
  j["x_final"] = std::vector<double>(x.data(), x.data() + x.size());
  if (r.best_certificate) j["certificate"] = certificate_to_json(*r.best_certificate);
  if (include_trace) {
    json t = json::array();
    for (const auto& rec : r.trace) {
      t.push_back({{"k", rec.k},
                   {"gamma", rec.gamma},
                   {"ls_trials", rec.ls_trials},
                   {"gap", rec.gap},
                   {"residual_norm", rec.residual_norm},
                   {"np", rec.np_so_far}});
    }
    j["trace"] = std::move(t);
  }
  return j;
}

}  // namespace gmvi
