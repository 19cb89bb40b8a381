#ifndef RINGGB_TERM_HPP
#define RINGGB_TERM_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace ringgb {

inline constexpr std::size_t kMaxVariables = 16;

using Exponent = std::uint32_t;

// Power product x_1^e_1 ... x_n^e_n. The all-zero vector is the unit term.
class Term {
 public:
  Term() = default;
  explicit Term(std::size_t nvars);
  Term(std::initializer_list<Exponent> exponents);
  explicit Term(std::span<const Exponent> exponents);

  std::size_t size() const noexcept { return size_; }
  Exponent operator[](std::size_t i) const noexcept { return exps_[i]; }
  void set(std::size_t i, Exponent e);
  std::span<const Exponent> exponents() const noexcept { return {exps_.data(), size_}; }

  std::uint64_t degree() const noexcept;
  bool is_unit() const noexcept;

  // Throws std::overflow_error when an exponent leaves the machine range.
  Term operator*(const Term& other) const;
  // Exact quotient; throws std::invalid_argument unless other divides *this.
  Term operator/(const Term& other) const;

  friend bool operator==(const Term& a, const Term& b) noexcept {
    return a.size_ == b.size_ && a.exps_ == b.exps_;
  }

 private:
  std::array<Exponent, kMaxVariables> exps_{};
  std::size_t size_ = 0;
};

// t1 divides t2 iff every exponent of t1 is <= the matching exponent of t2.
bool divides(const Term& t1, const Term& t2);
Term lcm(const Term& t1, const Term& t2);
// Divisibility-minimal elements of terms, deduplicated, in first-seen order.
std::vector<Term> min_terms(std::span<const Term> terms);

enum class OrderKind { lex, deglex };

/// Admissible term order: lex or degree-then-lex over a variable precedence.
/// precedence[0] is the most significant variable.
class TermOrder {
 public:
  TermOrder(OrderKind kind, std::size_t nvars);
  TermOrder(OrderKind kind, std::vector<std::size_t> precedence);

  OrderKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return precedence_.size(); }
  const std::vector<std::size_t>& precedence() const noexcept { return precedence_; }

  std::strong_ordering compare(const Term& a, const Term& b) const;
  bool less(const Term& a, const Term& b) const { return compare(a, b) < 0; }
  bool greater(const Term& a, const Term& b) const { return compare(a, b) > 0; }

  friend bool operator==(const TermOrder&, const TermOrder&) = default;

 private:
  OrderKind kind_;
  std::vector<std::size_t> precedence_;
};

}  // namespace ringgb

#endif  // RINGGB_TERM_HPP
