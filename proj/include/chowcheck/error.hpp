#ifndef CHOWCHECK_ERROR_HPP
#define CHOWCHECK_ERROR_HPP

#include <stdexcept>
#include <string>

namespace chowcheck {

/// Single exception type for all engine failures.  `kind` is the machine-readable
/// classification; `detail` names the offending object (parameter, monomial, term).
class Error : public std::runtime_error {
public:
    enum class Kind {
        AlphabetMismatch,   // operands declared over different parameter alphabets
        RingMismatch,       // graded classes from different ring presentations
        UnknownSymbol,      // name not present in an alphabet or generator list
        NonlinearEntry,     // equation not linear in the designated unknowns
        SingularSystem,     // elimination hit a structurally singular instance
        Unbounded,          // enumeration region is not finite
        CyclicRewrite,      // relation does not strictly reduce the monomial order
        DegreeMismatch,     // inhomogeneous input where a pure degree is required
        UnhousedSymbol,     // top-degree monomial with no integration table entry
        BadArgument,        // precondition violation not covered above
    };

    Error(Kind kind, const std::string& message, std::string detail = "")
        : std::runtime_error(message), kind_(kind), detail_(std::move(detail)) {}

    Kind kind() const { return kind_; }
    const std::string& detail() const { return detail_; }

private:
    Kind kind_;
    std::string detail_;
};

} // namespace chowcheck

#endif
