#include "gmlab/corealg/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace gmlab {

namespace {

// Single-line cursor with 1-based line/column tracking for error reports.
class LineScanner {
 public:
  LineScanner(const std::string& line, std::size_t lineno)
      : s_(line), line_(lineno), pos_(0) {}

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }

  bool eol() {
    skip_ws();
    return pos_ >= s_.size() || s_[pos_] == '#';
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  char take() {
    skip_ws();
    return s_[pos_++];
  }

  bool consume(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!consume(c)) fail(std::string("expected '") + c + "' (" + what + ")");
  }

  std::string ident() {
    skip_ws();
    if (pos_ >= s_.size() || !std::isalpha(static_cast<unsigned char>(s_[pos_])))
      fail("expected identifier");
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
            s_[pos_] == '_'))
      ++pos_;
    return s_.substr(start, pos_ - start);
  }

  long long number() {
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail("expected number");
    long long v = 0;
    while (pos_ < s_.size() &&
           std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > (1LL << 62)) fail("number too large");
      ++pos_;
    }
    return v;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line_, pos_ + 1, msg);
  }

  std::size_t lineno() const { return line_; }

 private:
  const std::string& s_;
  std::size_t line_;
  std::size_t pos_;
};

std::size_t var_index(const Ring& ring, const std::string& name,
                      LineScanner& sc) {
  for (std::size_t i = 0; i < ring->nvars(); ++i)
    if (ring->var_name(i) == name) return i;
  sc.fail("unknown variable '" + name + "'");
}

// polynomial := ['-'] term (('+'|'-') term)*
// term := number ('*' factor)* | factor ('*' factor)*
// factor := name ('^' number)?
Polynomial parse_poly_line(const Ring& ring, LineScanner& sc) {
  const FpField& F = ring->field();
  std::vector<Term> terms;
  bool negate = sc.consume('-');
  for (;;) {
    FpElt coeff = 1;
    std::vector<std::uint16_t> exps(ring->nvars(), 0);
    bool saw_factor = false;
    if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
      coeff = F.reduce(sc.number());
      saw_factor = true;
      if (sc.consume('*')) saw_factor = false;  // a variable factor follows
    }
    if (!saw_factor) {
      for (;;) {
        std::string name = sc.ident();
        std::size_t idx = var_index(ring, name, sc);
        long long e = 1;
        if (sc.consume('^')) e = sc.number();
        if (e < 0 || e > 60000) sc.fail("exponent out of range");
        exps[idx] = static_cast<std::uint16_t>(exps[idx] + e);
        if (!sc.consume('*')) break;
      }
    }
    if (negate) coeff = F.neg(coeff);
    terms.push_back({Monomial(std::move(exps), ring->weights()), coeff});
    if (sc.eol()) break;
    if (sc.consume('+')) {
      negate = false;
    } else if (sc.consume('-')) {
      negate = true;
    } else {
      sc.fail("expected '+', '-' or end of line");
    }
    if (sc.eol()) sc.fail("dangling sign at end of line");
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace

Polynomial parse_polynomial(const Ring& ring, const std::string& text) {
  LineScanner sc(text, 1);
  if (sc.eol()) throw ParseError(1, 1, "empty polynomial");
  return parse_poly_line(ring, sc);
}

ParsedIdeal parse_ideal_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  // header
  Ring ring;
  bool has_ring = false, has_ideal = false;
  std::vector<Polynomial> gens;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    LineScanner sc(line, lineno);
    if (sc.eol()) continue;
    if (!has_ring) {
      if (sc.ident() != "ring") sc.fail("expected 'ring'");
      if (sc.ident() != "p") sc.fail("expected 'p'");
      sc.expect('=', "characteristic");
      long long p = sc.number();
      if (p <= 2 || p >= (1LL << 31) ||
          !FpField::is_prime(static_cast<std::uint32_t>(p)))
        throw InvalidModulus(p);
      if (sc.ident() != "vars") sc.fail("expected 'vars'");
      std::vector<std::string> names;
      do {
        names.push_back(sc.ident());
      } while (sc.consume(','));
      if (!sc.eol()) sc.fail("trailing input after variable list");
      for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j)
          if (names[i] == names[j]) sc.fail("duplicate variable " + names[i]);
      ring = make_ring(static_cast<std::uint32_t>(p), std::move(names));
      has_ring = true;
      continue;
    }
    if (!has_ideal) {
      if (sc.ident() != "ideal") sc.fail("expected 'ideal'");
      if (!sc.eol()) sc.fail("trailing input after 'ideal'");
      has_ideal = true;
      continue;
    }
    gens.push_back(parse_poly_line(ring, sc));
  }
  if (!has_ring) throw ParseError(lineno + 1, 1, "missing ring header");
  if (!has_ideal) throw ParseError(lineno + 1, 1, "missing 'ideal' line");
  return {ring, std::move(gens)};
}

ParsedIdeal parse_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_ideal_text(ss.str());
}

std::string print_ideal_text(const Ring& ring,
                             const std::vector<Polynomial>& gens) {
  std::string out = "ring p=" + std::to_string(ring->characteristic()) +
                    " vars ";
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    if (i) out += ",";
    out += ring->var_name(i);
  }
  out += "\nideal\n";
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    out += g.to_string();
    out += "\n";
  }
  return out;
}

void write_ideal_file(const std::string& path, const Ring& ring,
                      const std::vector<Polynomial>& gens) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write file: " + path);
  out << print_ideal_text(ring, gens);
}

}  // namespace gmlab
