#include "cores/partition.hpp"

#include <charconv>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cores {

Partition Partition::from_parts(std::vector<std::int64_t> parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) {
            throw std::invalid_argument("partition parts must be >= 1");
        }
        if (i > 0 && parts[i] > parts[i - 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
    Partition p;
    p.parts_ = std::move(parts);
    return p;
}

Partition Partition::parse(std::string_view text) {
    auto fail = [&] {
        throw std::invalid_argument("bad partition literal: " + std::string(text));
    };
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    skip_ws();
    if (i >= text.size() || text[i] != '[') fail();
    ++i;
    std::vector<std::int64_t> parts;
    skip_ws();
    if (i < text.size() && text[i] == ']') {
        ++i;
    } else {
        while (true) {
            skip_ws();
            std::int64_t value = 0;
            auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
            if (ec != std::errc{}) fail();
            i = static_cast<std::size_t>(ptr - text.data());
            parts.push_back(value);
            skip_ws();
            if (i >= text.size()) fail();
            if (text[i] == ',') {
                ++i;
                continue;
            }
            if (text[i] == ']') {
                ++i;
                break;
            }
            fail();
        }
    }
    skip_ws();
    if (i != text.size()) fail();
    return from_parts(std::move(parts));
}

std::int64_t Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    // Column j (0-indexed) has length = number of parts > j.
    std::vector<std::int64_t> cols(static_cast<std::size_t>(parts_[0]), 0);
    for (std::int64_t part : parts_) {
        for (std::int64_t j = 0; j < part; ++j) {
            ++cols[static_cast<std::size_t>(j)];
        }
    }
    Partition q;
    q.parts_ = std::move(cols);
    return q;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

HookTable hook_table(const Partition& p) {
    const auto& parts = p.parts();
    const auto conj = p.conjugate().parts();
    HookTable table(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        table[i].resize(static_cast<std::size_t>(parts[i]));
        for (std::int64_t j = 0; j < parts[i]; ++j) {
            // arm + leg + 1 for the cell (i, j)
            table[i][static_cast<std::size_t>(j)] =
                (parts[i] - 1 - j) + (conj[static_cast<std::size_t>(j)] - 1 - static_cast<std::int64_t>(i)) + 1;
        }
    }
    return table;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
    os << '[';
    const auto& parts = p.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) os << ',';
        os << parts[i];
    }
    return os << ']';
}

}  // namespace cores
