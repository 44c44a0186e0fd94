#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace ferrers {

// An integer partition, stored as its positive parts in weakly decreasing
// order. Trailing zeros are stripped on construction, so the empty
// partition has exactly one representation. Immutable; compares
// structurally (lexicographic on the part list, so the empty partition is
// the smallest).
class Partition {
public:
    using Part = unsigned;

    Partition() = default;

    // Throws InvalidPartition if the nonzero prefix is not weakly
    // decreasing or a positive part follows a zero. Input is never sorted.
    explicit Partition(std::vector<Part> raw);
    Partition(std::initializer_list<Part> raw) : Partition(std::vector<Part>(raw)) {}

    const std::vector<Part>& parts() const noexcept { return parts_; }

    // r: number of nonzero parts, which is also the first part of the
    // conjugate.
    std::size_t length() const noexcept { return parts_.size(); }

    // Largest part, 0 for the empty partition.
    Part width() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    bool empty() const noexcept { return parts_.empty(); }

    // Sum of parts.
    std::size_t size() const noexcept;

    // i-th part, 0-based, with zero beyond length().
    Part part(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    // Transpose of the Ferrers diagram: part j counts the parts >= j+1.
    Partition conjugate() const;

    // Drops the first column of the diagram: (p1-1, ..., pr-1), zeros
    // stripped. Throws EmptyPartition on the empty partition.
    Partition remove_first_column() const;

    // True iff the diagram fits in a box of `rows` rows and `cols` columns.
    bool fits_in_box(std::size_t rows, std::size_t cols) const noexcept
    {
        return length() <= rows && width() <= cols;
    }

    // Comma-separated parts, "" for the empty partition.
    std::string to_text() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<Part> parts_;
};

// Parses the comma-separated text form. Whitespace around parts is
// ignored; zero parts are accepted and stripped. Throws InvalidPartition.
Partition parse_partition(std::string_view text);

// Every partition whose diagram fits in rows x cols, in lexicographic
// order of part lists with the empty partition first.
std::vector<Partition> partitions_in_box(std::size_t rows, std::size_t cols);

} // namespace ferrers

template <>
struct std::hash<ferrers::Partition> {
    std::size_t operator()(const ferrers::Partition& p) const noexcept
    {
        std::size_t h = p.length();
        for (auto v : p.parts())
            h = h * 1000003u ^ v;
        return h;
    }
};
