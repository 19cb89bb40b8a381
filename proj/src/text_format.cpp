#include "ringgb/text_format.hpp"

#include <cctype>
#include <limits>

namespace ringgb {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::invalid_argument("at position " + std::to_string(position) + ": " + message), position_(position) {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const PolyRing& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    std::vector<Monomial> monomials;
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    monomials.push_back(term(negative));
    while (true) {
      skip_ws();
      if (at_end()) break;
      char op = peek();
      if (op != '+' && op != '-') throw ParseError(std::string("expected '+' or '-', found '") + op + "'", pos_);
      ++pos_;
      monomials.push_back(term(op == '-'));
    }
    return ring_.normalize(std::move(monomials));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool factor_starts() const {
    return !at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || std::isalpha(static_cast<unsigned char>(peek())));
  }

  Monomial term(bool negative) {
    skip_ws();
    const std::size_t start = pos_;
    mpq_class coeff = negative ? -1 : 1;
    Term t = ring_.unit_term();
    if (!factor_starts()) throw ParseError("expected a number or variable", pos_);
    factor(coeff, t);
    while (true) {
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (!factor_starts()) throw ParseError("expected a number or variable after '*'", pos_);
      } else if (!factor_starts()) {
        break;
      }
      factor(coeff, t);
    }
    try {
      return Monomial{ring_.coeffs().from_rational(coeff), t};
    } catch (const RingError& e) {
      throw ParseError(e.what(), start);
    }
  }

  void factor(mpq_class& coeff, Term& t) {
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      mpz_class num = integer();
      mpz_class den = 1;
      skip_ws();
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip_ws();
        const std::size_t den_pos = pos_;
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
          throw ParseError("expected a denominator after '/'", pos_);
        den = integer();
        if (den == 0) throw ParseError("division by zero", den_pos);
      }
      mpq_class q(num, den);
      q.canonicalize();
      coeff *= q;
      return;
    }
    const std::size_t name_pos = pos_;
    std::size_t end = pos_;
    while (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) ++end;
    std::string_view name = text_.substr(pos_, end - pos_);
    pos_ = end;
    const auto& vars = ring_.variables();
    std::size_t index = vars.size();
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) index = i;
    if (index == vars.size()) throw ParseError("unknown variable '" + std::string(name) + "'", name_pos);

    std::uint64_t power = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
        throw ParseError("expected an exponent after '^'", pos_);
      const std::size_t exp_pos = pos_;
      mpz_class e = integer();
      if (e > std::numeric_limits<Exponent>::max()) throw ParseError("exponent too large", exp_pos);
      power = e.get_ui();
    }
    std::uint64_t total = std::uint64_t{t[index]} + power;
    if (total > std::numeric_limits<Exponent>::max()) throw ParseError("exponent too large", name_pos);
    t.set(index, static_cast<Exponent>(total));
  }

  mpz_class integer() {
    std::size_t end = pos_;
    while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
    mpz_class v(std::string(text_.substr(pos_, end - pos_)));
    pos_ = end;
    return v;
  }

  std::string_view text_;
  const PolyRing& ring_;
  std::size_t pos_ = 0;
};

std::string term_string(const Term& t, const PolyRing& ring) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.variables()[i];
    if (t[i] > 1) out += '^' + std::to_string(t[i]);
  }
  return out;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const PolyRing& ring) { return Parser(text, ring).parse(); }

std::string format_polynomial(const Polynomial& p, const PolyRing& ring) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Monomial& m : p) {
    const bool negative = sgn(m.coeff) < 0;
    const mpq_class magnitude = abs(m.coeff);
    std::string body;
    if (m.term.is_unit()) {
      body = magnitude.get_str();
    } else if (magnitude == 1) {
      body = term_string(m.term, ring);
    } else {
      body = magnitude.get_str() + "*" + term_string(m.term, ring);
    }
    if (first) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    out += body;
    first = false;
  }
  return out;
}

}  // namespace ringgb
