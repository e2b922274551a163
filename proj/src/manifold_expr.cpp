#include "pnum/manifold_expr.hpp"

#include "pnum/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>

namespace pnum {

namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  ManifoldExpr parse() {
    ManifoldExpr expr;
    expr.factors.push_back(factor());
    skip_space();
    while (pos_ < text_.size()) {
      expect('*');
      expr.factors.push_back(factor());
      skip_space();
    }
    return expr;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::Parse, what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept_word(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  void expect(char ch) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  long integer() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected an integer");
    }
    try {
      return std::stol(std::string(text_.substr(start, pos_ - start)));
    } catch (const std::out_of_range&) {
      pos_ = start;
      fail("integer out of range");
    }
  }

  ExprFactor factor() {
    ExprFactor f;
    if (accept_word("K3")) {
      f.kind = ExprFactor::Kind::K3;
      return f;
    }
    if (accept_word("HP2")) {
      f.kind = ExprFactor::Kind::HP2;
      return f;
    }
    if (accept_word("X")) {
      f.kind = ExprFactor::Kind::X;
      expect('(');
      const std::size_t n_pos = pos_;
      f.n = integer();
      expect(',');
      f.k = integer();
      if (f.n < 1 || f.k < 1 || (f.n + f.k) % 2 != 0) {
        pos_ = n_pos;
        fail("X(n,k;c) needs n, k >= 1 with n + k even");
      }
      expect(';');
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == 'c') {
        ++pos_;
      } else {
        f.c = integer();
      }
      expect(')');
      return f;
    }
    skip_space();
    fail("expected K3, HP2 or X(n,k;c)");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

bool ManifoldExpr::is_symbolic() const {
  for (const auto& f : factors) {
    if (f.kind == ExprFactor::Kind::X && !f.c) return true;
  }
  return false;
}

long ManifoldExpr::weight() const {
  long w = 0;
  for (const auto& f : factors) {
    switch (f.kind) {
      case ExprFactor::Kind::K3: w += 1; break;
      case ExprFactor::Kind::HP2: w += 2; break;
      case ExprFactor::Kind::X: w += (f.n + f.k) / 2; break;
    }
  }
  return w;
}

ManifoldExpr parse_manifold_expr(std::string_view text) { return Parser(text).parse(); }

PNumberVector evaluate(const ManifoldExpr& expr) {
  PNumberVector acc = unit_class();
  for (const auto& f : expr.factors) {
    PNumberVector v;
    switch (f.kind) {
      case ExprFactor::Kind::K3: v = class_K3(); break;
      case ExprFactor::Kind::HP2: v = class_HP2(); break;
      case ExprFactor::Kind::X: {
        const RingParams params{f.n, f.k};
        v = bundle_vector(params);
        v.nonneg_curved = true;
        const std::string nk = std::to_string(f.n) + "," + std::to_string(f.k);
        if (f.c) {
          v = v.evaluated(*f.c);
          v.is_spin = spin_check(params, *f.c);
          v.label = "X(" + nk + ";" + std::to_string(*f.c) + ")";
        } else {
          v.is_spin = f.n % 2 != 0;
          v.label = "X(" + nk + ";c)";
        }
        break;
      }
    }
    acc = product(acc, v);
  }
  return acc;
}

Partition parse_partition(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw Error(ErrorCode::Parse, "unbalanced brackets in partition '" + std::string(text) + "'");
    s = s.substr(1, s.size() - 2);
  }
  std::vector<long> parts;
  std::size_t start = 0;
  while (start < s.size()) {
    std::size_t end = s.find(',', start);
    if (end == std::string::npos) end = s.size();
    const std::string piece = s.substr(start, end - start);
    if (piece.empty() || !std::all_of(piece.begin(), piece.end(), [](unsigned char ch) { return std::isdigit(ch); })) {
      throw Error(ErrorCode::Parse, "bad partition part '" + piece + "' in '" + std::string(text) + "'");
    }
    const long part = std::stol(piece);
    if (part < 1) throw Error(ErrorCode::Parse, "partition parts must be positive in '" + std::string(text) + "'");
    parts.push_back(part);
    start = end + 1;
  }
  return Partition(std::move(parts));
}

PontryaginFunctional parse_functional_spec(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::Parse, std::string("functional spec is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("m") || !doc["m"].is_number_integer() || !doc.contains("entries") ||
      !doc["entries"].is_object()) {
    throw Error(ErrorCode::Validation, "functional spec needs an integer \"m\" and an object \"entries\"");
  }
  PontryaginFunctional f;
  f.m = doc["m"].get<long>();
  if (f.m < 1) throw Error(ErrorCode::Validation, "m must be >= 1");
  for (const Partition& p : partitions(f.m)) f.coefficients.emplace(p, Rat(0));
  for (const auto& [key, value] : doc["entries"].items()) {
    const Partition p = parse_partition(key);
    if (p.weight() != f.m) {
      throw Error(ErrorCode::Validation, "entry " + key + " has weight " + std::to_string(p.weight()) +
                                             ", expected " + std::to_string(f.m));
    }
    std::string text;
    if (value.is_string()) {
      text = value.get<std::string>();
    } else if (value.is_number_integer()) {
      text = std::to_string(value.get<long>());
    } else {
      throw Error(ErrorCode::Validation, "entry " + key + " must be a rational string \"p/q\"");
    }
    try {
      f.coefficients[p] = parse_rat(text);
    } catch (const Error&) {
      throw Error(ErrorCode::Validation, "entry " + key + " has malformed value '" + text + "'");
    }
  }
  return f;
}

std::string functional_spec_to_json(const PontryaginFunctional& f) {
  nlohmann::ordered_json doc;
  doc["m"] = f.m;
  doc["entries"] = nlohmann::ordered_json::object();
  for (const auto& [p, v] : f.coefficients) {
    if (v != 0) doc["entries"][p.to_string()] = to_string(v);
  }
  return doc.dump(2);
}

}  // namespace pnum
