#pragma once

#include <stdexcept>
#include <string>

namespace bdcoh {

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

struct division_by_zero : error {
    division_by_zero() : error("division by zero") {}
};

struct spec_mismatch : error {
    explicit spec_mismatch(const std::string& what) : error("spec mismatch: " + what) {}
};

struct dim_mismatch : error {
    explicit dim_mismatch(const std::string& what) : error("dimension mismatch: " + what) {}
};

struct singular_matrix : error {
    singular_matrix() : error("singular matrix") {}
};

struct invalid_twist : error {
    explicit invalid_twist(const std::string& what) : error("invalid twist: " + what) {}
};

struct invalid_triple : error {
    explicit invalid_triple(const std::string& what) : error("invalid triple: " + what) {}
};

struct cyb_failure : error {
    explicit cyb_failure(const std::string& what) : error("CYB check failed: " + what) {}
};

struct not_closed : error {
    explicit not_closed(const std::string& what) : error("set not norm closed: " + what) {}
};

struct nesting_undecided : error {
    explicit nesting_undecided(const std::string& what) : error("nesting undecided: " + what) {}
};

struct internal_zero : error {
    explicit internal_zero(const std::string& what) : error("internal zero: " + what) {}
};

struct triple_incompatible : error {
    explicit triple_incompatible(const std::string& what) : error("triple incompatible: " + what) {}
};

struct unclassifiable : error {
    explicit unclassifiable(const std::string& what) : error("unclassifiable: " + what) {}
};

struct nonzero_required : error {
    explicit nonzero_required(const std::string& what) : error("nonzero required: " + what) {}
};

struct bad_input : error {
    explicit bad_input(const std::string& what) : error("bad input: " + what) {}
};

}  // namespace bdcoh
