#pragma once

#include <stdexcept>
#include <string>

namespace morsify {

// Base class for everything this library throws on bad input or bad state.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// exact arithmetic
class field_mismatch_error : public error {
public:
    explicit field_mismatch_error(const std::string& msg) : error(msg) {}
};

class field_validation_error : public error {
public:
    explicit field_validation_error(const std::string& msg) : error(msg) {}
};

class not_rational_error : public error {
public:
    explicit not_rational_error(const std::string& msg) : error(msg) {}
};

// Puiseux polynomials
class zero_series_error : public error {
public:
    explicit zero_series_error(const std::string& msg) : error(msg) {}
};

class equal_series_error : public error {
public:
    explicit equal_series_error(const std::string& msg) : error(msg) {}
};

class incompatible_point_error : public error {
public:
    explicit incompatible_point_error(const std::string& msg) : error(msg) {}
};

class non_real_product_error : public error {
public:
    explicit non_real_product_error(const std::string& msg) : error(msg) {}
};

class unit_vanishes_error : public error {
public:
    explicit unit_vanishes_error(const std::string& msg) : error(msg) {}
};

// root systems and trees
class non_positive_valuation_error : public error {
public:
    explicit non_positive_valuation_error(const std::string& msg) : error(msg) {}
};

class not_right_reduced_error : public error {
public:
    explicit not_right_reduced_error(const std::string& msg) : error(msg) {}
};

class conjugation_closure_error : public error {
public:
    explicit conjugation_closure_error(const std::string& msg) : error(msg) {}
};

class duplicate_root_error : public error {
public:
    explicit duplicate_root_error(const std::string& msg) : error(msg) {}
};

// analysis
class equal_critical_value_series_error : public error {
public:
    explicit equal_critical_value_series_error(const std::string& msg) : error(msg) {}
};

class injectivity_required_error : public error {
public:
    explicit injectivity_required_error(const std::string& msg) : error(msg) {}
};

class indeterminate_sign_error : public error {
public:
    explicit indeterminate_sign_error(const std::string& msg) : error(msg) {}
};

class equal_discriminant_roots_error : public error {
public:
    explicit equal_discriminant_roots_error(const std::string& msg) : error(msg) {}
};

// Raised when two supposedly equivalent internal computation paths disagree.
class internal_check_error : public error {
public:
    explicit internal_check_error(const std::string& msg) : error(msg) {}
};

// oracle
class no_stabilization_error : public error {
public:
    explicit no_stabilization_error(const std::string& msg) : error(msg) {}
};

// input files
class syntax_error : public error {
public:
    syntax_error(int line, int column, const std::string& expected)
        : error("syntax error at line " + std::to_string(line) + ", column " +
                std::to_string(column) + ": expected " + expected),
          line_(line), column_(column), expected_(expected) {}
    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& expected() const { return expected_; }

private:
    int line_;
    int column_;
    std::string expected_;
};

class field_required_error : public error {
public:
    explicit field_required_error(const std::string& msg) : error(msg) {}
};

}  // namespace morsify
