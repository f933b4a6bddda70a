#include "pbrat/report.hpp"

#include <cstdint>
#include <limits>

namespace pbrat {

Json int_json(Int v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return Json(static_cast<std::int64_t>(v));
  }
  return Json(to_string(v));
}

Json ints_json(std::span<const Int> xs) {
  Json arr = Json::array();
  for (Int x : xs) arr.push_back(int_json(x));
  return arr;
}

Json to_json(const ClassificationReport& r) {
  Json j;
  j["input"] = r.input ? ints_json(r.input->values()) : ints_json(r.weights.w);
  j["reduced"] = r.reduced ? ints_json(r.reduced->values()) : Json(nullptr);
  j["verdict"] = to_string(r.verdict);
  j["criterion"] = to_string(r.criterion);
  j["alpha"] = int_json(r.alpha);
  j["ample_canonical"] = r.ample_canonical;
  j["rational_singularity"] = r.rational_singularity_at_origin;
  j["witness"] = r.witness ? ints_json(*r.witness) : Json(nullptr);
  j["weights"] = ints_json(r.weights.w);
  j["degree"] = int_json(r.weights.degree);
  return j;
}

Json to_json(const Reduction& r, const ExponentTuple& input) {
  Json j;
  j["input"] = ints_json(input.values());
  j["reduced"] = ints_json(r.result.values());
  Json trace = Json::array();
  for (const auto& step : r.trace) trace.push_back(ints_json(step));
  j["trace"] = std::move(trace);
  j["cotype_input"] = cotype(input);
  j["cotype_reduced"] = cotype(r.result);
  return j;
}

Json to_json(const HilbertProfile& p) {
  Json j;
  j["weights"] = ints_json(p.weights);
  j["degree"] = int_json(p.degree);
  j["k"] = int_json(p.k);
  j["dim_S_k"] = int_json(p.dim_S_k);
  j["dim_S_k_minus_d"] = int_json(p.dim_S_k_minus_d);
  j["dim_A_k"] = int_json(p.dim_A_k);
  return j;
}

Json to_json(const SweepReport& r) {
  Json j;
  j["max_entry"] = int_json(r.config.max_entry);
  j["n_range"] = ints_json(r.config.n_range);
  Json checks = Json::array();
  for (Check c : r.config.checks) checks.push_back(to_string(c));
  j["checks"] = std::move(checks);
  j["workers"] = r.config.workers;
  j["tuples_scanned"] = r.tuples_scanned;
  Json runs = Json::object();
  for (const auto& [check, count] : r.checks_run) runs[std::string(to_string(check))] = count;
  j["checks_run"] = std::move(runs);
  Json violations = Json::array();
  for (const Violation& v : r.violations) {
    Json item;
    item["tuple"] = ints_json(v.tuple);
    item["check"] = v.check;
    item["detail"] = v.detail;
    violations.push_back(std::move(item));
  }
  j["violations"] = std::move(violations);
  j["passed"] = r.passed();
  j["elapsed_us"] = static_cast<std::int64_t>(r.elapsed.count());
  return j;
}

Json to_json(const ParamCheckReport& r) {
  Json j;
  j["a"] = int_json(r.a);
  j["c"] = int_json(r.c);
  j["k"] = r.k;
  j["l"] = r.l;
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["tol"] = r.tol;
  j["max_residual"] = r.max_residual;
  j["redrawn"] = r.redrawn;
  j["passed"] = r.passed;
  return j;
}

}  // namespace pbrat
