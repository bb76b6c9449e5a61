#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace dke
{

// Every failure carries a short machine-readable code ("dangling-world",
// "syntax-error", ...) next to the human message.
class error : public std::runtime_error
{
    std::string _code;
    std::optional< std::size_t > _position;

public:
    error( std::string code, const std::string& detail, std::optional< std::size_t > position = {} )
        : std::runtime_error( code + ": " + detail ), _code{ std::move( code ) }, _position{ position } {}

    [[nodiscard]] const std::string& code() const { return _code; }
    [[nodiscard]] std::optional< std::size_t > position() const { return _position; }
};

} // namespace dke
