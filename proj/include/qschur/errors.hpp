#ifndef QSCHUR_ERRORS_HPP
#define QSCHUR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qschur {

// Base class for every error this library throws on bad input or a broken
// internal invariant. Mathematical check *failures* (a relation not holding)
// are not exceptions; they are reported through VerificationReport.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// --- cartan ---------------------------------------------------------------
struct bad_diagonal : error {
    using error::error;
};
struct not_symmetrizable : error {
    using error::error;
};
struct not_finite_type : error {
    using error::error;
};
struct symmetrizer_out_of_range : error {
    using error::error;
};
struct unknown_type : error {
    using error::error;
};
struct index_out_of_range : error {
    using error::error;
};

// --- weyl / hwmodule -------------------------------------------------------
struct not_dominant : error {
    using error::error;
};
struct rank_mismatch : error {
    using error::error;
};
struct cartan_mismatch : error {
    using error::error;
};

// --- qarith ---------------------------------------------------------------
struct pole_at_point : error {
    using error::error;
};
struct zero_evaluation_point : error {
    using error::error;
};

// --- schur ----------------------------------------------------------------
struct not_saturated : error {
    using error::error;
};
struct empty_pi : error {
    using error::error;
};
struct membership_failure : error {
    using error::error;
};

// --- present / resource limits ---------------------------------------------
struct bound_too_small : error {
    using error::error;
};
struct resource_budget_exceeded : error {
    using error::error;
};

// Internal consistency failure: exact arithmetic produced something the
// mathematics forbids (nonzero remainder in an exact division, singular Gram
// block, ...). Always a bug, never a user error.
struct internal_error : error {
    using error::error;
};

} // namespace qschur

#endif
