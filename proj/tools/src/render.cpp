#include "render.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <ostream>

namespace invsemi::cli {

std::vector<Integer> parse_integer_list(const std::string& text, Integer minimum) {
  std::vector<Integer> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    std::string piece = text.substr(start, end - start);
    piece.erase(0, piece.find_first_not_of(" \t"));
    piece.erase(piece.find_last_not_of(" \t") + 1);
    Integer value = 0;
    const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size() || value < minimum)
      throw UsageError("'" + text + "' is not a comma-separated list of integers >= " + std::to_string(minimum));
    out.push_back(value);
    start = end + 1;
  }
  return out;
}

ordered_json to_json(const ExponentVector& a) { return a.coords(); }

namespace {

template <class T>
ordered_json terms_json(const T& p) {
  ordered_json terms = ordered_json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    terms.push_back({{"coeff", it->second}, {"exp", to_json(it->first)}});
  return {{"text", p.to_string()}, {"terms", terms}};
}

bool is_scalar(const ordered_json& v) { return !v.is_object() && !v.is_array(); }

std::string scalar_text(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  return v.dump();
}

std::string inline_text(const ordered_json& v) {
  if (v.is_object() && v.contains("text")) return scalar_text(v["text"]);
  if (is_scalar(v)) return scalar_text(v);
  if (v.is_array() && std::all_of(v.begin(), v.end(), is_scalar)) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + scalar_text(v[i]);
    return s + ")";
  }
  return {};
}

void render(std::ostream& out, const ordered_json& value, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, v] : value.items()) {
    if (v.is_object() && !v.contains("text")) {
      out << pad << key << ":\n";
      render(out, v, indent + 2);
    } else if (v.is_array() && !v.empty() && !std::all_of(v.begin(), v.end(), is_scalar)) {
      out << pad << key << ":\n";
      for (const auto& item : v) {
        const std::string line = inline_text(item);
        if (!line.empty()) {
          out << pad << "  - " << line << "\n";
        } else {
          out << pad << "  -\n";
          render(out, item, indent + 4);
        }
      }
    } else if (v.is_array()) {
      out << pad << key << ": ";
      for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar_text(v[i]);
      out << "\n";
    } else {
      out << pad << key << ": " << inline_text(v) << "\n";
    }
  }
}

}  // namespace

ordered_json to_json(const InversePolynomial& j) { return terms_json(j); }

ordered_json to_json(const Polynomial& p) { return terms_json(p); }

ordered_json to_json(const Binomial& b) {
  return {{"text", Polynomial::monomial(b.lhs).to_string() + " - " + Polynomial::monomial(b.rhs).to_string()},
          {"lhs", to_json(b.lhs)},
          {"rhs", to_json(b.rhs)},
          {"degree", b.degree}};
}

ordered_json to_json(const BigInteger& n) {
  if (n <= std::numeric_limits<Integer>::max()) return static_cast<Integer>(n);
  return n.str();
}

ordered_json to_json(const PfaffianStructure& s) {
  ordered_json generators = ordered_json::array();
  for (const auto& g : s.generators) generators.push_back(to_json(g));
  ordered_json matrix = ordered_json::array();
  for (const auto& row : s.skew_matrix) {
    ordered_json r = ordered_json::array();
    for (const auto& [sign, a] : row) r.push_back(sign == 0 ? std::string("0") : Polynomial::monomial(a, sign).to_string());
    matrix.push_back(r);
  }
  const auto& o = s.alpha_off;
  return {{"permutation", s.permutation},
          {"alpha", s.alpha},
          {"alpha_off",
           {{"a21", o[0]}, {"a31", o[1]}, {"a32", o[2]}, {"a42", o[3]}, {"a13", o[4]}, {"a43", o[5]}, {"a24", o[6]},
            {"a14", o[7]}}},
          {"generators", generators},
          {"matrix", matrix}};
}

void render_human(std::ostream& out, const ordered_json& value) { render(out, value, 0); }

}  // namespace invsemi::cli
