#include "cremona/numeric.hpp"

#include <cctype>

namespace cremona {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::CommonFactor: return "CommonFactor";
    case ErrorCode::NotAPoint: return "NotAPoint";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::IndeterminateAt: return "IndeterminateAt";
    case ErrorCode::HintNotIndeterminate: return "HintNotIndeterminate";
    case ErrorCode::HintNotExceptional: return "HintNotExceptional";
    case ErrorCode::InvalidCenter: return "InvalidCenter";
    case ErrorCode::NotASubtower: return "NotASubtower";
    case ErrorCode::SurfaceMismatch: return "SurfaceMismatch";
    case ErrorCode::NotAMorphism: return "NotAMorphism";
    case ErrorCode::NotUntangled: return "NotUntangled";
    case ErrorCode::NoInverseDeclared: return "NoInverseDeclared";
    case ErrorCode::InverseMismatch: return "InverseMismatch";
    case ErrorCode::SamplingFailed: return "SamplingFailed";
    case ErrorCode::InterpolationUnverified: return "InterpolationUnverified";
    case ErrorCode::ResidualIndeterminacy: return "ResidualIndeterminacy";
    case ErrorCode::RoundCapExceeded: return "RoundCapExceeded";
    case ErrorCode::OrbitCapExceeded: return "OrbitCapExceeded";
    case ErrorCode::JetCapExceeded: return "JetCapExceeded";
    case ErrorCode::NoRealRoot: return "NoRealRoot";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "UnknownError";
}

Rat rat_pow(const Rat& base, long e) {
  if (e < 0) {
    if (base == 0) fail(ErrorCode::InternalError, "0 to negative power");
    return rat_pow(Rat(1) / base, -e);
  }
  Rat acc(1), b(base);
  unsigned long k = static_cast<unsigned long>(e);
  while (k > 0) {
    if (k & 1) acc *= b;
    b *= b;
    k >>= 1;
  }
  return acc;
}

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::optional<Rat> parse_rat(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::size_t slash = text.find('/');
  auto is_int = [](const std::string& s) {
    std::size_t i = (s.size() > 0 && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  try {
    if (slash == std::string::npos) {
      if (!is_int(text)) return std::nullopt;
      return Rat(Int(text));
    }
    std::string a = text.substr(0, slash);
    std::string b = text.substr(slash + 1);
    if (!is_int(a) || !is_int(b)) return std::nullopt;
    Int db(b);
    if (db == 0) return std::nullopt;
    return make_rat(Int(a), db);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

std::vector<Int> primitive_vector(const std::vector<Int>& v) {
  Int g(0);
  for (const Int& x : v) g = int_gcd(g, x);
  if (g == 0) fail(ErrorCode::NotAPoint, "all coordinates are zero");
  std::vector<Int> out;
  out.reserve(v.size());
  int lead = 0;
  for (const Int& x : v) {
    Int q = x / g;
    if (lead == 0 && q != 0) lead = sign(q);
    out.push_back(q);
  }
  if (lead < 0)
    for (Int& x : out) x = -x;
  return out;
}

std::vector<Int> primitive_vector(const std::vector<Rat>& v) {
  Int l(1);
  for (const Rat& r : v) l = int_lcm(l, den(r));
  std::vector<Int> w;
  w.reserve(v.size());
  for (const Rat& r : v) w.push_back(num(r) * (l / den(r)));
  return primitive_vector(w);
}

}  // namespace cremona
