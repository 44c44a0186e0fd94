#include "ferrers/partition.hpp"

#include "ferrers/errors.hpp"

#include <charconv>
#include <numeric>

namespace ferrers {

Partition::Partition(std::vector<Part> raw)
{
    while (!raw.empty() && raw.back() == 0)
        raw.pop_back();
    for (std::size_t i = 1; i < raw.size(); ++i) {
        if (raw[i] > raw[i - 1])
            throw InvalidPartition("parts must be weakly decreasing: part " + std::to_string(i)
                                   + " (" + std::to_string(raw[i]) + ") exceeds part "
                                   + std::to_string(i - 1) + " (" + std::to_string(raw[i - 1])
                                   + ")");
    }
    parts_ = std::move(raw);
}

std::size_t Partition::size() const noexcept
{
    return std::accumulate(parts_.begin(), parts_.end(), std::size_t{0});
}

Partition Partition::conjugate() const
{
    std::vector<Part> out(width(), 0);
    for (auto p : parts_)
        for (Part j = 0; j < p; ++j)
            ++out[j];
    return Partition(std::move(out));
}

Partition Partition::remove_first_column() const
{
    if (empty())
        throw EmptyPartition("cannot remove the first column of the empty partition");
    std::vector<Part> out(parts_);
    for (auto& p : out)
        --p;
    return Partition(std::move(out));
}

std::string Partition::to_text() const
{
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

void box_partitions(std::size_t rows, Partition::Part max_part, std::vector<Partition::Part>& prefix,
                    std::vector<Partition>& out)
{
    out.emplace_back(prefix);
    if (rows == 0)
        return;
    for (Partition::Part p = 1; p <= max_part; ++p) {
        prefix.push_back(p);
        box_partitions(rows - 1, p, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

Partition parse_partition(std::string_view text)
{
    text = trim(text);
    if (text.empty())
        return {};
    std::vector<Partition::Part> raw;
    while (true) {
        auto comma = text.find(',');
        auto field = trim(text.substr(0, comma));
        Partition::Part value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
            throw InvalidPartition("malformed partition part '" + std::string(field) + "'");
        raw.push_back(value);
        if (comma == std::string_view::npos)
            break;
        text.remove_prefix(comma + 1);
    }
    return Partition(std::move(raw));
}

std::vector<Partition> partitions_in_box(std::size_t rows, std::size_t cols)
{
    std::vector<Partition> out;
    std::vector<Partition::Part> prefix;
    box_partitions(rows, static_cast<Partition::Part>(cols), prefix, out);
    return out;
}

} // namespace ferrers
