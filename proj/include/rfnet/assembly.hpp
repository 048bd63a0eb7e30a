#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "rfnet/errors.hpp"
#include "rfnet/network.hpp"

// Small netlist-style builder on top of the S-parameter core: add blocks,
// wire ports together, declare which ports stay external, then reduce to a
// single block. Wiring is checked: every port of every added block has to be
// either connected once or exposed once.

namespace rfnet {

class Assembly {
public:
    using BlockId = std::size_t;

    BlockId add(NetworkBlock blk) {
        offsets_.push_back(total_ports_);
        total_ports_ += blk.n_ports();
        blocks_.push_back(std::move(blk));
        return blocks_.size() - 1;
    }

    void connect(BlockId a, std::size_t pa, BlockId b, std::size_t pb) {
        joins_.emplace_back(global(a, pa), global(b, pb));
    }

    // External ports of the built network appear in expose() call order.
    void expose(BlockId b, std::size_t p) { external_.push_back(global(b, p)); }

    NetworkBlock build() const {
        if (blocks_.empty())
            throw WiringError("assembly has no blocks");

        std::vector<int> uses(total_ports_, 0);
        for (const auto& [k, l] : joins_) {
            ++uses[k];
            ++uses[l];
        }
        for (std::size_t g : external_)
            ++uses[g];
        for (std::size_t g = 0; g < total_ports_; ++g)
            if (uses[g] != 1)
                throw WiringError(describe(g) +
                                  (uses[g] ? " is wired more than once"
                                           : " is left dangling"));

        NetworkBlock net = blocks_.front();
        for (std::size_t b = 1; b < blocks_.size(); ++b)
            net = merge(net, blocks_[b]);

        // live position of each original global port, -1 once reduced away
        std::vector<std::ptrdiff_t> cur(total_ports_);
        for (std::size_t g = 0; g < total_ports_; ++g)
            cur[g] = static_cast<std::ptrdiff_t>(g);
        for (const auto& [gk, gl] : joins_) {
            const auto k = cur[gk], l = cur[gl];
            net = connect_ports(net, static_cast<std::size_t>(k),
                                static_cast<std::size_t>(l));
            for (auto& c : cur) {
                if (c == k || c == l)
                    c = -1;
                else if (c >= 0)
                    c -= (c > k ? 1 : 0) + (c > l ? 1 : 0);
            }
        }

        std::vector<std::size_t> perm;
        perm.reserve(external_.size());
        for (std::size_t g : external_)
            perm.push_back(static_cast<std::size_t>(cur[g]));
        return permute_ports(net, perm);
    }

private:
    std::size_t global(BlockId b, std::size_t p) const {
        if (b >= blocks_.size() || p >= blocks_[b].n_ports())
            throw WiringError("no such block port");
        return offsets_[b] + p;
    }

    std::string describe(std::size_t g) const {
        std::size_t b = blocks_.size() - 1;
        while (offsets_[b] > g)
            --b;
        const std::string& label = blocks_[b].label();
        return "port " + std::to_string(g - offsets_[b] + 1) + " of block " +
               std::to_string(b) + (label.empty() ? "" : " (" + label + ")");
    }

    std::vector<NetworkBlock> blocks_;
    std::vector<std::size_t> offsets_;
    std::vector<std::pair<std::size_t, std::size_t>> joins_;
    std::vector<std::size_t> external_;
    std::size_t total_ports_ = 0;
};

} // namespace rfnet
