#include "selschur/json_io.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace selschur {

using nlohmann::json;

json complex_to_json(Complex z) {
  return json{{"re", z.real()}, {"im", z.imag()}};
}

Complex complex_from_json(const json& j) {
  return Complex(j.at("re").get<double>(), j.at("im").get<double>());
}

json logform_to_json(LogComplex lf) {
  return json{{"logabs", lf.log_abs}, {"arg", lf.arg}};
}

json partition_to_json(const Partition& lam) {
  return json(lam.parts());
}

Partition partition_from_json(const json& j) {
  std::vector<int> parts = j.get<std::vector<int>>();
  return Partition(std::span<const int>(parts));
}

json params_to_json(const SelbergParams& p) {
  return json{{"a", complex_to_json(p.a)},
              {"b", complex_to_json(p.b)},
              {"rho", complex_to_json(p.rho)},
              {"N", p.n_vars}};
}

SelbergParams params_from_json(const json& j) {
  SelbergParams p;
  p.a = complex_from_json(j.at("a"));
  p.b = complex_from_json(j.at("b"));
  p.rho = complex_from_json(j.at("rho"));
  p.n_vars = j.at("N").get<int>();
  return p;
}

json conditions_to_json(const ConditionReport& r) {
  json violated = json::array();
  for (const auto& v : r.violated)
    violated.push_back(json{{"name", v.name}, {"slack", v.slack}});
  return json{{"real_ok", r.real_ok},
              {"complex_ok", r.complex_ok},
              {"violated", violated}};
}

ConditionReport conditions_from_json(const json& j) {
  ConditionReport r;
  r.real_ok = j.at("real_ok").get<bool>();
  r.complex_ok = j.at("complex_ok").get<bool>();
  for (const auto& v : j.at("violated"))
    r.violated.push_back(
        {v.at("name").get<std::string>(), v.at("slack").get<double>()});
  return r;
}

json report_to_json(const VerificationReport& r) {
  return json{{"formula", r.formula},
              {"params", params_to_json(r.params)},
              {"shape", r.shape},
              {"closed_form", complex_to_json(r.closed_form)},
              {"oracle",
               json{{"value", complex_to_json(r.oracle_value)},
                    {"nodes", r.node_count},
                    {"nodes_per_dim", r.nodes_per_dim},
                    {"seed", r.seed},
                    {"region", r.region}}},
              {"abs_error", r.abs_error},
              {"rel_error", r.rel_error},
              {"conditions", conditions_to_json(r.conditions)},
              {"pass", r.pass},
              {"tier", r.tier}};
}

VerificationReport report_from_json(const json& j) {
  VerificationReport r;
  r.formula = j.at("formula").get<std::string>();
  r.params = params_from_json(j.at("params"));
  r.shape = j.at("shape").get<std::string>();
  r.closed_form = complex_from_json(j.at("closed_form"));
  const json& oracle = j.at("oracle");
  r.oracle_value = complex_from_json(oracle.at("value"));
  r.node_count = oracle.at("nodes").get<long long>();
  r.nodes_per_dim = oracle.at("nodes_per_dim").get<int>();
  r.seed = oracle.at("seed").get<unsigned long long>();
  r.region = oracle.at("region").get<std::string>();
  r.abs_error = j.at("abs_error").get<double>();
  r.rel_error = j.at("rel_error").get<double>();
  r.conditions = conditions_from_json(j.at("conditions"));
  r.pass = j.at("pass").get<bool>();
  r.tier = j.at("tier").get<std::string>();
  return r;
}

Complex parse_complex(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty complex literal");

  auto parse_real = [](const std::string& t, std::size_t& pos) {
    std::size_t used = 0;
    double v = std::stod(t.substr(pos), &used);
    pos += used;
    return v;
  };

  std::size_t pos = 0;
  // Pure imaginary like "2i" or "i" / "-i".
  if (s.back() == 'i' || s.back() == 'I') {
    // Find the split between the real part and the imaginary tail: the last
    // '+'/'-' that is not part of an exponent.
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size() - 1; i > 0; --i) {
      char c = s[i];
      if ((c == '+' || c == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
        split = i;
        break;
      }
    }
    auto parse_imag = [&](std::string t) {
      if (t.empty() || t == "+") return 1.0;
      if (t == "-") return -1.0;
      return std::stod(t);
    };
    if (split == std::string::npos) {
      return Complex(0.0, parse_imag(s.substr(0, s.size() - 1)));
    }
    double re = parse_real(s, pos);
    if (pos != split)
      throw std::invalid_argument("malformed complex literal: " + text);
    return Complex(re, parse_imag(s.substr(split, s.size() - 1 - split)));
  }
  double re = parse_real(s, pos);
  if (pos != s.size())
    throw std::invalid_argument("malformed complex literal: " + text);
  return Complex(re, 0.0);
}

std::string complex_to_string(Complex z) {
  std::ostringstream os;
  os.precision(17);
  os << z.real();
  if (z.imag() != 0.0) {
    os << (z.imag() < 0 ? '-' : '+');
    os << std::abs(z.imag()) << 'i';
  }
  return os.str();
}

}  // namespace selschur
