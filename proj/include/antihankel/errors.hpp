#pragma once

#include <stdexcept>
#include <string>

namespace antihankel {

// Base class for all diagnostic errors raised by the solver library.
class SolverError : public std::runtime_error {
public:
    explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a secular evaluation point falls inside the exclusion radius
// of a pole. Callers are expected to keep their abscissae away from poles;
// the solver shrinks every search interval to pole +/- eps_pole.
class PoleProximityError : public SolverError {
public:
    PoleProximityError(double t, double pole)
        : SolverError("secular evaluation too close to a pole (t=" +
                      std::to_string(t) + ", pole=" + std::to_string(pole) + ")"),
          t_(t), pole_(pole) {}
    double t() const { return t_; }
    double pole() const { return pole_; }

private:
    double t_;
    double pole_;
};

// Raised by the closed-form eigenvector when the rank-one denominator is
// too small for the formula to be trustworthy. Callers fall back to
// inverse iteration.
class DegenerateDenominatorError : public SolverError {
public:
    explicit DegenerateDenominatorError(double denominator)
        : SolverError("closed-form eigenvector denominator is degenerate (" +
                      std::to_string(denominator) + ")"),
          denominator_(denominator) {}
    double denominator() const { return denominator_; }

private:
    double denominator_;
};

// Raised when an eigenvector is requested at a pole value; pole-valued
// eigenvalues get inverse-iteration vectors, not closed forms.
class PoleValueInputError : public SolverError {
public:
    explicit PoleValueInputError(double value)
        : SolverError("eigenvector requested at a pole value (" +
                      std::to_string(value) + ")"),
          value_(value) {}
    double value() const { return value_; }

private:
    double value_;
};

// Raised by the dense Jacobi oracle when the off-diagonal mass fails to
// drop below the threshold within the sweep budget.
class ConvergenceError : public SolverError {
public:
    explicit ConvergenceError(const std::string& what) : SolverError(what) {}
};

} // namespace antihankel
