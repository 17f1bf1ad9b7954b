// Copyright 2026 The Econofock Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "econofock/errors.hpp"

namespace econofock {

/// Hard cap on the unrestricted index space: 2^24 occupation patterns.
inline constexpr std::size_t max_total_modes = 24;

enum class Species { money, debt };

/// A single fermionic mode: money mode k or debt mode q.
struct ModeId {
    Species species;
    std::size_t index;

    friend bool operator==(const ModeId&, const ModeId&) = default;
};

inline ModeId money_mode(std::size_t k) { return {Species::money, k}; }
inline ModeId debt_mode(std::size_t q) { return {Species::debt, q}; }

/// Occupation pattern over M money modes followed by D debt modes.
///
/// Global mode position p (money 0..M-1, then debt M..M+D-1) is stored at bit
/// width-1-p, so the string form reads left to right in mode order and the
/// unsigned value of the pattern induces the canonical basis ordering.
class OccupationState {
public:
    OccupationState() = default;
    OccupationState(std::uint32_t bits, std::size_t width) : bits_(bits), width_(width) {}

    static OccupationState from_string(const std::string& pattern);

    std::uint32_t bits() const { return bits_; }
    std::size_t width() const { return width_; }

    bool occupied(std::size_t position) const {
        return (bits_ >> (width_ - 1 - position)) & 1u;
    }

    OccupationState with_bit(std::size_t position, bool value) const {
        const std::uint32_t mask = 1u << (width_ - 1 - position);
        return {value ? (bits_ | mask) : (bits_ & ~mask), width_};
    }

    /// Number of occupied modes with global position strictly below `position`.
    /// This is the Jordan-Wigner string length for an operator acting there.
    std::size_t occupied_below(std::size_t position) const {
        return static_cast<std::size_t>(std::popcount(bits_ >> (width_ - position)));
    }

    std::size_t total_occupied() const {
        return static_cast<std::size_t>(std::popcount(bits_));
    }

    std::string to_string() const;

    friend bool operator==(const OccupationState&, const OccupationState&) = default;

private:
    std::uint32_t bits_ = 0;
    std::size_t width_ = 0;
};

/// Identity of a Fock basis: enough to rebuild it deterministically.
struct FockTag {
    std::size_t m_money = 0;
    std::size_t n_debt = 0;
    std::optional<int> sector;

    friend bool operator==(const FockTag&, const FockTag&) = default;
};

/// Identity of a labeled qubit register.
struct QubitTag {
    std::vector<std::string> labels;

    friend bool operator==(const QubitTag&, const QubitTag&) = default;
};

using BasisTag = std::variant<FockTag, QubitTag>;

std::string tag_description(const BasisTag& tag);

/// Ordered occupation-number basis for M money and D debt modes, optionally
/// restricted to the charge sector N_money - N_debt = Q. Immutable after
/// construction and safe to share across threads.
class FockBasis {
public:
    std::size_t money_modes() const { return m_money_; }
    std::size_t debt_modes() const { return n_debt_; }
    std::size_t total_modes() const { return m_money_ + n_debt_; }
    std::optional<int> sector() const { return sector_; }
    std::size_t dim() const { return dim_; }

    FockTag tag() const { return {m_money_, n_debt_, sector_}; }

    /// Global position of a mode in the fixed money-then-debt order.
    std::size_t position(ModeId mode) const;

    OccupationState occupation_of(std::size_t index) const;
    std::size_t index_of(const OccupationState& occ) const;

    /// Index lookup that reports absence instead of throwing.
    std::optional<std::size_t> try_index_of(const OccupationState& occ) const;

    int charge_of(const OccupationState& occ) const;
    std::size_t money_count(const OccupationState& occ) const;
    std::size_t debt_count(const OccupationState& occ) const;

    friend FockBasis build_basis(std::size_t m_money, std::size_t n_debt,
                                 std::optional<int> sector);

private:
    FockBasis() = default;

    std::size_t m_money_ = 0;
    std::size_t n_debt_ = 0;
    std::optional<int> sector_;
    std::size_t dim_ = 0;
    // Sector bases materialize their states; the unrestricted basis is the
    // identity map index == bits and stores nothing.
    std::vector<std::uint32_t> states_;
};

FockBasis build_basis(std::size_t m_money, std::size_t n_debt,
                      std::optional<int> sector = std::nullopt);

}  // namespace econofock
