#pragma once

#include <stdexcept>
#include <string>

namespace crouzeix {

// Base of every error raised by the library. Callers that only care about
// "the computation failed" catch this; the subclasses name the reason.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Linear algebra
class NonFiniteEntry : public Error { public: using Error::Error; };
class DimensionMismatch : public Error { public: using Error::Error; };
class SingularSystem : public Error { public: using Error::Error; };
class SingularMatrix : public Error { public: using Error::Error; };
class NoConvergence : public Error { public: using Error::Error; };
class NotHermitian : public Error { public: using Error::Error; };

// Geometry of W(A_k)
class BadDimension : public Error { public: using Error::Error; };
class DegenerateDirection : public Error { public: using Error::Error; };
class TooCoarse : public Error { public: using Error::Error; };

// Conformal map
class CoincidentNodes : public Error { public: using Error::Error; };
class OriginOutside : public Error { public: using Error::Error; };

// Bounds
class RootOnCircle : public Error { public: using Error::Error; };
class BadFreeLength : public Error { public: using Error::Error; };

// Rational map f1
class PoleProximity : public Error { public: using Error::Error; };
class DegenerateMap : public Error { public: using Error::Error; };

}  // namespace crouzeix
