#pragma once

#include <stdexcept>
#include <string>

namespace triv {

// Machine-readable failure kinds. Each maps to one of three CLI exit classes:
// parse errors (2), violated preconditions (3), internal oracle disagreements (4).
enum class errc {
    // gf
    non_prime_characteristic,
    reducible_modulus,
    missing_modulus,
    division_by_zero,
    mixed_fields,
    even_characteristic,
    order_does_not_divide,
    field_too_large,
    // ring
    mixed_rings,
    // matrix
    non_square,
    shape_mismatch,
    // code
    empty_code,
    budget_exceeded,
    non_integral_result,
    length_mismatch,
    // cyclic
    division_by_zero_poly,
    zero_polynomial,
    not_a_divisor,
    mu_out_of_range,
    coefficient_not_in_base_field,
    // weighing
    not_weighing,
    wrong_residue_class,
    not_skew,
    not_found,
    // construct
    zero_alpha,
    not_symmetric,
    not_self_dual,
    // io / cli
    parse_error,
    // cross-checked computations disagreed; indicates a bug, not user error
    internal_oracle_disagreement,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::non_prime_characteristic: return "NonPrimeCharacteristic";
        case errc::reducible_modulus: return "ReducibleModulus";
        case errc::missing_modulus: return "MissingModulus";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::mixed_fields: return "MixedFields";
        case errc::even_characteristic: return "EvenCharacteristic";
        case errc::order_does_not_divide: return "OrderDoesNotDivide";
        case errc::field_too_large: return "FieldTooLarge";
        case errc::mixed_rings: return "MixedRings";
        case errc::non_square: return "NonSquare";
        case errc::shape_mismatch: return "ShapeMismatch";
        case errc::empty_code: return "EmptyCode";
        case errc::budget_exceeded: return "BudgetExceeded";
        case errc::non_integral_result: return "NonIntegralResult";
        case errc::length_mismatch: return "LengthMismatch";
        case errc::division_by_zero_poly: return "DivisionByZeroPoly";
        case errc::zero_polynomial: return "ZeroPolynomial";
        case errc::not_a_divisor: return "NotADivisor";
        case errc::mu_out_of_range: return "MuOutOfRange";
        case errc::coefficient_not_in_base_field: return "CoefficientNotInBaseField";
        case errc::not_weighing: return "NotWeighing";
        case errc::wrong_residue_class: return "WrongResidueClass";
        case errc::not_skew: return "NotSkew";
        case errc::not_found: return "NotFound";
        case errc::zero_alpha: return "ZeroAlpha";
        case errc::not_symmetric: return "NotSymmetric";
        case errc::not_self_dual: return "NotSelfDual";
        case errc::parse_error: return "ParseError";
        case errc::internal_oracle_disagreement: return "InternalOracleDisagreement";
    }
    return "UnknownError";
}

// Exit-code class used by the CLI.
inline int errc_exit_class(errc c) {
    switch (c) {
        case errc::parse_error: return 2;
        case errc::internal_oracle_disagreement: return 4;
        default: return 3;
    }
}

}  // namespace triv
