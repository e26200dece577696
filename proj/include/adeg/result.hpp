#pragma once

#include <optional>
#include <string>
#include <utility>

namespace adeg {

enum class Errc {
    none = 0,
    parse,
    invalid_input,
    unknown_vertex,
    no_such_edge,
    not_representable,
    degree_too_high,
    move_inapplicable,
    dimension_mismatch,
    size_bound,
    not_positive,
    search_exhausted,
    not_checkerboard,
    euler_violation,
};

struct Error {
    Errc code = Errc::none;
    std::string message;
    int index = -1;  // for transcript replay failures
};

template <class T>
class [[nodiscard]] Result {
public:
    Result(T v) : val_(std::move(v)) {}
    Result(Error e) : err_(std::move(e)) {}

    bool ok() const { return val_.has_value(); }
    explicit operator bool() const { return ok(); }

    T& value() & { return *val_; }
    const T& value() const& { return *val_; }
    T&& value() && { return std::move(*val_); }
    const Error& error() const { return *err_; }

private:
    std::optional<T> val_;
    std::optional<Error> err_;
};

inline Error make_error(Errc code, std::string message, int index = -1) {
    return Error{code, std::move(message), index};
}

const char* errc_name(Errc c);

}  // namespace adeg
