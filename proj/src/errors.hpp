#pragma once
#include <stdexcept>
#include <string>

namespace kinv {

// Kept in sync with the KN_ERR_* codes in knotinv.h.
enum class Err {
    Parse = 1,
    Validation,
    Domain,
    Shape,
    DivisionByZero,
    UnknownCrossing,
    UnknownArc,
    Framing,
    Singular,
    Certification,
    Schema,
    Internal,
};

struct Error : std::runtime_error {
    Err code;
    Error(Err c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

const char* err_name(Err e);

}  // namespace kinv
