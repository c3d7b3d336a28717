#include "haarshift/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace haarshift {

namespace {

DyadicInterval interval_from_text(const std::string& text) {
  const auto parsed = parse_interval(text);
  if (!parsed) throw std::runtime_error("bad interval syntax: " + text);
  return *parsed;
}

Sqrt2Scalar scalar_from_text(const std::string& text) {
  const auto parsed = parse_scalar(text);
  if (!parsed) throw std::runtime_error("bad scalar syntax: " + text);
  return *parsed;
}

}  // namespace

Json function_to_json(const DyadicFunction& f) {
  Json j;
  j["root"] = format_interval(f.root());
  j["depth"] = f.depth();
  j["mode"] = "exact";
  Json leaves = Json::array();
  for (const auto& v : synthesize(f).values) leaves.push_back(v.str());
  j["leaves"] = std::move(leaves);
  return j;
}

Json float_function_to_json(const FloatFunction& f) {
  Json j;
  j["root"] = format_interval(f.root);
  j["depth"] = f.depth;
  j["mode"] = "float";
  j["leaves"] = f.values;
  return j;
}

bool json_is_float_mode(const Json& j) {
  return j.value("mode", "exact") == std::string("float");
}

DyadicFunction function_from_json(const Json& j) {
  if (json_is_float_mode(j))
    throw std::runtime_error("exact-mode function required, file is float mode");
  LeafVector v;
  v.root = interval_from_text(j.at("root").get<std::string>());
  v.depth = j.at("depth").get<int>();
  const auto& leaves = j.at("leaves");
  if (leaves.size() != (std::size_t{1} << v.depth))
    throw std::runtime_error("function file: leaf count must be 2^depth");
  for (const auto& leaf : leaves)
    v.values.push_back(scalar_from_text(leaf.get<std::string>()));
  return analyze(v);
}

FloatFunction float_function_from_json(const Json& j) {
  FloatFunction f;
  f.root = interval_from_text(j.at("root").get<std::string>());
  f.depth = j.at("depth").get<int>();
  const auto& leaves = j.at("leaves");
  if (leaves.size() != (std::size_t{1} << f.depth))
    throw std::runtime_error("function file: leaf count must be 2^depth");
  const bool floats = json_is_float_mode(j);
  for (const auto& leaf : leaves) {
    if (floats)
      f.values.push_back(leaf.get<double>());
    else
      f.values.push_back(scalar_from_text(leaf.get<std::string>()).to_double());
  }
  return f;
}

Json form_to_json(const RestrictedShiftForm& form) {
  Json j;
  j["K"] = format_interval(form.k);
  j["constant"] = form.constant.str();
  j["haar"] = form.haar.str();
  Json inner = Json::array();
  for (const auto& [l, c] : form.inner) {
    Json item;
    item["L"] = format_interval(l);
    item["coef"] = c.str();
    inner.push_back(std::move(item));
  }
  j["inner"] = std::move(inner);
  j["norm2"] = form.norm2().str();
  return j;
}

Json bound_report_to_json(const BoundReport& rep) {
  Json j;
  j["I"] = format_interval(rep.i);
  j["K"] = format_interval(rep.k);
  j["case"] = case_name(rep.case_class);
  j["exact_constant"] = format_rational(rep.exact_constant);
  if (rep.paper_bound)
    j["paper_bound"] = format_rational(*rep.paper_bound);
  else
    j["paper_bound"] = nullptr;
  if (rep.eta_factor) j["eta_factor"] = format_rational(*rep.eta_factor);
  return j;
}

Json claims_to_json(const std::vector<ClaimReport>& claims) {
  Json arr = Json::array();
  for (const auto& c : claims) {
    Json j;
    j["claim"] = c.claim;
    j["paper_ref"] = c.paper_ref;
    j["status"] = c.status;
    j["pairs_checked"] = c.pairs_checked;
    Json details = Json::object();
    Json example = Json::object();
    for (const auto& [k, v] : c.details) {
      if (k.rfind("example.", 0) == 0)
        example[k.substr(8)] = v;
      else
        details[k] = v;
    }
    if (!example.empty()) details["example"] = std::move(example);
    j["details"] = std::move(details);
    arr.push_back(std::move(j));
  }
  return arr;
}

TrigPolynomial trig_from_json(const Json& j, DyadicInterval interval) {
  TrigPolynomial poly;
  poly.interval = interval;
  for (const auto& item : j.at("coeffs")) {
    const int k = item.at("k").get<int>();
    const double re = item.value("re", 0.0);
    const double im = item.value("im", 0.0);
    poly.coefficients.emplace_back(k, std::complex<double>(re, im));
  }
  return poly;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace haarshift
