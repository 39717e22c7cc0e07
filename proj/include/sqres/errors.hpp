#ifndef SQRES_ERRORS_HPP
#define SQRES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sqres {

// Base class for every library failure mode. Callers that do not care about
// the precise category can catch this one.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid input outside the mathematical domain of an operation.
struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

// Amplitude evaluation requested at (or numerically indistinguishable from) a
// resonance pole, where L and S diverge.
struct PoleError : Error {
    explicit PoleError(const std::string& what) : Error(what) {}
};

// beta = -u'/u evaluated at a node of the transformation function.
struct NodeError : Error {
    explicit NodeError(const std::string& what) : Error(what) {}
};

// A Decaying/Capture Gamow build was requested at a k that does not satisfy
// Delta(k) ~ 0.
struct NotAPole : Error {
    explicit NotAPole(const std::string& what) : Error(what) {}
};

// k lies in the wrong quadrant of the complex plane for the requested build,
// or a Newton iterate left the admissible quadrant.
struct WrongQuadrant : Error {
    explicit WrongQuadrant(const std::string& what) : Error(what) {}
};

// Iterative refinement exhausted its iteration budget.
struct NoConvergence : Error {
    explicit NoConvergence(const std::string& what) : Error(what) {}
};

// A transmission scan found no accepted peak in the requested window.
struct NoPeaksError : Error {
    explicit NoPeaksError(const std::string& what) : Error(what) {}
};

// The flux velocity v(x) vanished where a second-order deformation needs to
// divide by it. Reported, never smoothed.
struct ZeroVelocityError : Error {
    explicit ZeroVelocityError(const std::string& what) : Error(what) {}
};

} // namespace sqres

#endif
