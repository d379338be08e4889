#pragma once

#include <map>
#include <memory>
#include <utility>

#include "nhq/error.hpp"
#include "nhq/scalar.hpp"

namespace nhq {

/// Finite formal combination sum_k c_k * key_k over a shared context.
///
/// Zero coefficients are never stored. The context (a quiver or a
/// representation space) is shared between all elements built from it; a
/// default-constructed element is the context-free zero and combines with
/// anything.
template <class Key, class Coeff, class Context>
class LinearCombination {
 public:
  using key_type = Key;
  using coeff_type = Coeff;
  using context_type = Context;
  using ContextPtr = std::shared_ptr<const Context>;
  using Terms = std::map<Key, Coeff>;

  LinearCombination() = default;
  explicit LinearCombination(ContextPtr context) : context_(std::move(context)) {}
  LinearCombination(ContextPtr context, Key key, Coeff coeff = Coeff(1))
      : context_(std::move(context)) {
    add(std::move(key), coeff);
  }

  const ContextPtr& context() const { return context_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coeff coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Coeff() : it->second;
  }

  void add(const Key& key, const Coeff& coeff) {
    if (nhq::is_zero(coeff)) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (nhq::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Adds factor * other.
  template <class Factor>
  void add_scaled(const LinearCombination& other, const Factor& factor) {
    adopt_context(other);
    for (const auto& [k, c] : other.terms_) add(k, c * factor);
  }

  LinearCombination& operator+=(const LinearCombination& other) {
    adopt_context(other);
    for (const auto& [k, c] : other.terms_) add(k, c);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& other) {
    adopt_context(other);
    for (const auto& [k, c] : other.terms_) add(k, -c);
    return *this;
  }
  template <class Factor>
  LinearCombination& operator*=(const Factor& factor) {
    Terms scaled;
    for (auto& [k, c] : terms_) {
      Coeff v = c * factor;
      if (!nhq::is_zero(v)) scaled.emplace(k, std::move(v));
    }
    terms_ = std::move(scaled);
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) {
    return a += b;
  }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) {
    return a -= b;
  }
  friend LinearCombination operator-(LinearCombination a) {
    for (auto& [k, c] : a.terms_) c = -c;
    return a;
  }
  friend LinearCombination operator*(LinearCombination a, const Coeff& factor) { return a *= factor; }
  friend LinearCombination operator*(const Coeff& factor, LinearCombination a) { return a *= factor; }

  /// Structural equality of the normalized term maps.
  friend bool operator==(const LinearCombination& a, const LinearCombination& b) {
    return a.terms_ == b.terms_;
  }

  /// Throws MismatchError if both sides carry different contexts.
  void require_same_context(const LinearCombination& other) const {
    if (context_ && other.context_ && context_ != other.context_ &&
        !(*context_ == *other.context_)) {
      throw MismatchError("operands belong to different structures");
    }
  }

  /// Sets the context of a context-free zero.
  void set_context(ContextPtr context) { context_ = std::move(context); }

 private:
  void adopt_context(const LinearCombination& other) {
    require_same_context(other);
    if (!context_) context_ = other.context_;
  }

  ContextPtr context_;
  Terms terms_;
};

}  // namespace nhq
