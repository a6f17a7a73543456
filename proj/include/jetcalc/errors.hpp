#ifndef JETCALC_ERRORS_HPP
#define JETCALC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace jetcalc {

// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed textual input (polynomials, file formats, CLI payloads).
class parse_error : public error {
public:
    explicit parse_error(const std::string& msg) : error(msg) {}
};

// A configured hard cap was hit (Groebner degree/basis limits) or a
// truncation cap is too small to certify the requested result.
class resource_error : public error {
public:
    explicit resource_error(const std::string& msg) : error(msg) {}
};

// An operation was called outside its stated domain.
class precondition_error : public error {
public:
    explicit precondition_error(const std::string& msg) : error(msg) {}
};

// All Jacobian minors vanish up to the cap: the arc cannot be certified to
// lie outside the critical locus, so lifting is refused.
class critical_locus_error : public resource_error {
public:
    explicit critical_locus_error(const std::string& msg) : resource_error(msg) {}
};

} // namespace jetcalc

#endif
