#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace ucover {

// Expected/failure pair used by operations whose failure is a normal outcome
// (search exhaustion, unsatisfiable inference) rather than a caller bug.
template <class T>
struct Result {
    std::optional<T> value;
    std::string error;

    bool ok() const { return value.has_value(); }
    explicit operator bool() const { return ok(); }

    T& operator*() { return *value; }
    const T& operator*() const { return *value; }
    T* operator->() { return &*value; }
    const T* operator->() const { return &*value; }

    // Unwraps or throws; for call sites where failure indicates a bug.
    T& expect(const std::string& what) {
        if (!ok()) throw std::runtime_error(what + ": " + error);
        return *value;
    }

    static Result success(T v) { return {std::move(v), {}}; }
    static Result failure(std::string why) { return {std::nullopt, std::move(why)}; }
};

}  // namespace ucover
