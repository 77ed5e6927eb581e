#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace ringforge {

// Interned symbolic variable. Variables carry a fixed total order used by the
// graded-lex term order and by canonical serialization: names are compared by
// alphabetic prefix first and numeric suffix second, so
//   a1 < a2 < ... < a11 < p < q < r < s < x0 < x1 < ...
// The order between two variables never changes once both are interned.
class Variable {
public:
    explicit Variable(std::string_view name);

    std::uint32_t id() const noexcept { return id_; }
    const std::string& name() const;

    // Position of this variable in the canonical order (a1 first). Ranks of
    // existing variables may shift when new names are interned, but their
    // relative order is preserved.
    std::uint32_t rank() const;

    bool operator==(Variable other) const noexcept { return id_ == other.id_; }
    bool operator!=(Variable other) const noexcept { return id_ != other.id_; }
    bool operator<(Variable other) const { return rank() < other.rank(); }

    static Variable from_id(std::uint32_t id) noexcept {
        Variable v;
        v.id_ = id;
        return v;
    }

    // Canonical order of two interned ids without constructing Variables.
    static std::uint32_t rank_of(std::uint32_t id);
    static const std::string& name_of(std::uint32_t id);

private:
    Variable() = default;
    std::uint32_t id_ = 0;
};

} // namespace ringforge
