#include "ringforge/variable.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace ringforge {
namespace {

struct Entry {
    std::string name;
    std::string prefix;   // leading non-digit part
    long long suffix = -1; // trailing digits, -1 if none
};

struct Registry {
    std::mutex mu;
    std::deque<Entry> entries;                       // id -> entry
    std::unordered_map<std::string, std::uint32_t> index;
    std::vector<std::uint32_t> rank_by_id;           // id -> canonical rank

    static Registry& instance() {
        static Registry r;
        return r;
    }

    static bool key_less(const Entry& a, const Entry& b) {
        if (a.prefix != b.prefix) return a.prefix < b.prefix;
        if (a.suffix != b.suffix) return a.suffix < b.suffix;
        return a.name < b.name;
    }

    std::uint32_t intern(std::string_view name) {
        if (name.empty()) throw std::invalid_argument("variable name must not be empty");
        std::lock_guard<std::mutex> lock(mu);
        auto it = index.find(std::string(name));
        if (it != index.end()) return it->second;

        Entry e;
        e.name = std::string(name);
        std::size_t digits = 0;
        while (digits < e.name.size() && std::isdigit(static_cast<unsigned char>(e.name[e.name.size() - 1 - digits])))
            ++digits;
        if (digits > 0 && digits < e.name.size() && digits <= 18) {
            e.prefix = e.name.substr(0, e.name.size() - digits);
            e.suffix = std::stoll(e.name.substr(e.name.size() - digits));
        } else {
            e.prefix = e.name;
        }
        auto id = static_cast<std::uint32_t>(entries.size());
        entries.push_back(std::move(e));
        index.emplace(entries.back().name, id);
        rebuild_ranks();
        return id;
    }

    // Interning is rare (variable sets are tiny); rebuilding the dense rank
    // table keeps the hot compare path to a single indexed load.
    void rebuild_ranks() {
        std::vector<std::uint32_t> ids(entries.size());
        for (std::uint32_t i = 0; i < ids.size(); ++i) ids[i] = i;
        std::sort(ids.begin(), ids.end(), [&](std::uint32_t a, std::uint32_t b) {
            return key_less(entries[a], entries[b]);
        });
        rank_by_id.assign(entries.size(), 0);
        for (std::uint32_t r = 0; r < ids.size(); ++r) rank_by_id[ids[r]] = r;
    }
};

} // namespace

Variable::Variable(std::string_view name) : id_(Registry::instance().intern(name)) {}

const std::string& Variable::name() const { return name_of(id_); }

std::uint32_t Variable::rank() const { return rank_of(id_); }

std::uint32_t Variable::rank_of(std::uint32_t id) {
    auto& r = Registry::instance();
    assert(id < r.rank_by_id.size());
    return r.rank_by_id[id];
}

const std::string& Variable::name_of(std::uint32_t id) {
    auto& r = Registry::instance();
    assert(id < r.entries.size());
    return r.entries[id].name;
}

} // namespace ringforge
