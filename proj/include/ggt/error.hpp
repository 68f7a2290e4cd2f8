#pragma once

#include <stdexcept>
#include <string>

namespace ggt {

enum class ErrorCode {
    parse,              // malformed text input
    alphabet_mismatch,  // word over the wrong alphabet
    unknown_name,       // unknown node, vertex, label, fixture or check id
    invalid_argument,   // precondition violated
    overflow,           // exact arithmetic overflow or coset table overflow
    io,                 // unreadable or unwritable file
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace ggt
