#include "sidon/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "sidon/error.hpp"

namespace sidon {

namespace {

std::string strip(const std::string& line) {
  std::string s = line.substr(0, line.find('#'));
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail_at(std::size_t line, const std::string& what) {
  throw Error(Errc::parse_error, "line " + std::to_string(line) + ": " + what);
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

Rational parse_decimal(const std::string& field) {
  std::string s = field;
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = s[0] == '-';
    s.erase(0, 1);
  }
  long exponent = 0;
  if (const auto e = s.find_first_of("eE"); e != std::string::npos) {
    std::string exp = s.substr(e + 1);
    s.resize(e);
    bool exp_negative = false;
    if (!exp.empty() && (exp[0] == '+' || exp[0] == '-')) {
      exp_negative = exp[0] == '-';
      exp.erase(0, 1);
    }
    if (!all_digits(exp) || exp.size() > 6) {
      throw Error(Errc::parse_error, "bad exponent in '" + field + "'");
    }
    exponent = std::stol(exp);
    if (exp_negative) exponent = -exponent;
  }
  std::string int_part = s, frac_part;
  if (const auto dot = s.find('.'); dot != std::string::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if ((int_part.empty() && frac_part.empty()) ||
      (!int_part.empty() && !all_digits(int_part)) ||
      (!frac_part.empty() && !all_digits(frac_part))) {
    throw Error(Errc::parse_error, "not a number: '" + field + "'");
  }
  Integer num(int_part + frac_part, 10);
  exponent -= static_cast<long>(frac_part.size());
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  Rational r = exponent >= 0 ? Rational(num * scale) : Rational(num, scale);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot open '" + path + "'");
  return in;
}

}  // namespace

Rational parse_rational(const std::string& field) {
  if (const auto slash = field.find('/'); slash != std::string::npos) {
    const Integer p = parse_integer(field.substr(0, slash));
    const Integer q = parse_integer(field.substr(slash + 1));
    if (q <= 0) throw Error(Errc::parse_error, "denominator must be positive: '" + field + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
  }
  return parse_decimal(field);
}

IntegerInput parse_integers(std::istream& in) {
  IntegerInput out;
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    const std::string s = strip(line);
    if (s.empty()) continue;
    try {
      out.values.push_back(parse_integer(s));
    } catch (const Error& e) {
      fail_at(no, e.what());
    }
  }
  if (out.values.empty()) throw Error(Errc::empty_file, "no integers in input");
  out.dedup_removed = sort_dedupe(out.values);
  return out;
}

PointInput parse_points(std::istream& in) {
  std::vector<Point> pts;
  std::set<Point> seen;
  std::size_t removed = 0, dim = 0;
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    const std::string s = strip(line);
    if (s.empty()) continue;
    std::istringstream fields(s);
    Point p;
    for (std::string f; fields >> f;) {
      try {
        p.push_back(parse_rational(f));
      } catch (const Error& e) {
        fail_at(no, e.what());
      }
    }
    if (dim == 0) dim = p.size();
    if (p.size() != dim) {
      fail_at(no, "expected " + std::to_string(dim) + " coordinates, got " +
                      std::to_string(p.size()));
    }
    if (seen.insert(p).second) {
      pts.push_back(std::move(p));
    } else {
      ++removed;
    }
  }
  if (pts.empty()) throw Error(Errc::empty_file, "no points in input");
  return PointInput{PointSet(std::move(pts)), removed};
}

IntegerInput read_integers(const std::string& path) {
  auto in = open(path);
  return parse_integers(in);
}

PointInput read_points(const std::string& path) {
  auto in = open(path);
  return parse_points(in);
}

}  // namespace sidon
