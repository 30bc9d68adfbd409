#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "planegerm/rational.hpp"
#include "planegerm/ratfunc.hpp"
#include "planegerm/upoly.hpp"

namespace planegerm {

// Every branch decision of the recognizer (is this coefficient zero? what
// is its sign?) goes through a Judge so that the same code runs over Q and
// over Q(u) for one-parameter viewpoint families.
template <class K>
class Judge {
 public:
  virtual ~Judge() = default;
  virtual bool is_zero(const K& v) = 0;
  virtual int sign(const K& v) = 0;
};

class ExactJudge : public Judge<Rat> {
 public:
  bool is_zero(const Rat& v) override { return sgn(v) == 0; }
  int sign(const Rat& v) override { return sgn(v); }
};

// Thrown when a nonzero rational function vanishes (or has a pole) at the
// reference sample point; the caller must split its interval there.
class SampleHitsRoot : public std::runtime_error {
 public:
  explicit SampleHitsRoot(UPoly p) : std::runtime_error("sample point is a critical value"), poly(std::move(p)) {}
  UPoly poly;
};

// Decisions valid on the open interval of u around `sample` that contains
// no root of any recorded critical polynomial.
class GenericJudge : public Judge<RatFunc> {
 public:
  explicit GenericJudge(Rat sample) : sample_(std::move(sample)) {}
  bool is_zero(const RatFunc& v) override;
  int sign(const RatFunc& v) override;
  const std::vector<UPoly>& critical() const { return critical_; }

 private:
  void record(const RatFunc& v);
  Rat sample_;
  std::vector<UPoly> critical_;
};

// Decisions at a real root of a squarefree polynomial.
class RootJudge : public Judge<RatFunc> {
 public:
  RootJudge(UPoly p, RealRoot root) : p_(std::move(p)), root_(std::move(root)) {}
  bool is_zero(const RatFunc& v) override { return sign(v) == 0; }
  int sign(const RatFunc& v) override;

 private:
  UPoly p_;
  RealRoot root_;
};

inline std::optional<Rat> as_rational(const Rat& v) { return v; }
inline std::optional<Rat> as_rational(const RatFunc& v) {
  if (v.is_constant()) return v.constant();
  return std::nullopt;
}

}  // namespace planegerm
