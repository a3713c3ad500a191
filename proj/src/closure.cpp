#include "ybx/closure.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "ybx/error.hpp"

namespace ybx {

namespace fs = std::filesystem;

const char* flavor_name(Flavor f) { return f == Flavor::M ? "M" : "A"; }

namespace {

constexpr int kCacheFormat = 1;

struct UnionFind {
    std::vector<int> parent, rank;
    explicit UnionFind(std::size_t n) : parent(n), rank(n, 0) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (rank[a] < rank[b]) std::swap(a, b);
        parent[b] = a;
        if (rank[a] == rank[b]) ++rank[a];
    }
};

}  // namespace

GradedMonoid::GradedMonoid(Solution relations, Flavor flavor, EngineConfig cfg)
    : rel_(std::move(relations)), flavor_(flavor), cfg_(std::move(cfg)), n_(rel_.size()) {
    Level l0;
    l0.count = 1;
    l0.parent = {-1};
    l0.letter = {-1};
    l0.first = {0};
    levels_.push_back(std::move(l0));
}

int GradedMonoid::computed_length() const {
    std::lock_guard lock(mu_);
    return static_cast<int>(levels_.size()) - 1;
}

const Level& GradedMonoid::level(int L) {
    if (L < 0) throw InvalidInput("negative length");
    std::lock_guard lock(mu_);
    while (static_cast<int>(levels_.size()) <= L) build_next();
    return levels_[L];
}

void GradedMonoid::finish(Level& lv, const Level& prev, int L) const {
    lv.parent.assign(lv.count, -1);
    lv.letter.assign(lv.count, -1);
    lv.first.assign(lv.count, 0);
    for (int c = 0; c < prev.count; ++c)
        for (int x = 0; x < n_; ++x) {
            int id = lv.trans[static_cast<std::size_t>(c) * n_ + x];
            if (lv.parent[id] < 0) {
                lv.parent[id] = c;
                lv.letter[id] = x;
            }
            lv.first[id] |= L == 1 ? Subset{1} << x : prev.first[c];
        }
}

void GradedMonoid::build_next() {
    const int L = static_cast<int>(levels_.size());
    const Level& prev = levels_[L - 1];
    const std::size_t nodes = static_cast<std::size_t>(prev.count) * n_;
    if (L > cfg_.length_budget)
        throw ResourceLimit(std::string(flavor_name(flavor_)) + " closure at length " + std::to_string(L) +
                                " exceeds the length budget " + std::to_string(cfg_.length_budget),
                            L, static_cast<std::size_t>(L), static_cast<std::size_t>(cfg_.length_budget));
    if (nodes > cfg_.node_budget)
        throw ResourceLimit(std::string(flavor_name(flavor_)) + " closure at length " + std::to_string(L) +
                                " needs " + std::to_string(nodes) + " nodes, budget " +
                                std::to_string(cfg_.node_budget),
                            L, nodes, cfg_.node_budget);
    Level lv;
    if (L >= 2 && try_load(L, lv)) {
        finish(lv, prev, L);
        levels_.push_back(std::move(lv));
        ++cache_hits_;
        return;
    }
    lv.trans.assign(nodes, -1);
    if (L == 1) {
        std::iota(lv.trans.begin(), lv.trans.end(), 0);
        lv.count = n_;
    } else {
        const Level& pp = levels_[L - 2];
        UnionFind uf(nodes);
        // rewriting the last two letters of p y x; p only matters through its class d
        for (int d = 0; d < pp.count; ++d)
            for (int y = 0; y < n_; ++y) {
                const int c1 = prev.trans[static_cast<std::size_t>(d) * n_ + y];
                for (int x = 0; x < n_; ++x) {
                    auto [y2, x2] = rel_(y, x);
                    const int c2 = prev.trans[static_cast<std::size_t>(d) * n_ + y2];
                    uf.unite(c1 * n_ + x, c2 * n_ + x2);
                }
            }
        std::vector<int> id_of_root(nodes, -1);
        int next = 0;
        for (std::size_t i = 0; i < nodes; ++i) {
            int r = uf.find(static_cast<int>(i));
            if (id_of_root[r] < 0) id_of_root[r] = next++;
            lv.trans[i] = id_of_root[r];
        }
        lv.count = next;
    }
    finish(lv, prev, L);
    if (L >= 2) store(L, lv);
    levels_.push_back(std::move(lv));
}

int GradedMonoid::fold(int L, int c, std::span<const int> suffix) {
    if (suffix.empty()) return c;
    level(L + static_cast<int>(suffix.size()));
    std::lock_guard lock(mu_);
    for (std::size_t i = 0; i < suffix.size(); ++i) {
        int x = suffix[i];
        if (x < 0 || x >= n_) throw InvalidInput("letter out of range");
        c = levels_[L + i + 1].trans[static_cast<std::size_t>(c) * n_ + x];
    }
    return c;
}

ClassRef GradedMonoid::concat(ClassRef a, ClassRef b) {
    Word w = canonical(b);
    return {flavor_, a.length + b.length, fold(a.length, a.id, w)};
}

Word GradedMonoid::canonical(int L, int id) {
    level(L);
    std::lock_guard lock(mu_);
    if (id < 0 || id >= levels_[L].count) throw InvalidInput("class id out of range");
    Word w(L);
    for (int i = L; i >= 1; --i) {
        w[i - 1] = levels_[i].letter[id];
        id = levels_[i].parent[id];
    }
    return w;
}

bool GradedMonoid::equal(std::span<const int> u, std::span<const int> v) {
    if (u.size() != v.size()) return false;
    return class_of(u) == class_of(v);
}

std::vector<int> GradedMonoid::partition(int L) {
    double words = 1;
    for (int i = 0; i < L; ++i) words *= n_;
    if (words > static_cast<double>(cfg_.node_budget))
        throw ResourceLimit("X^" + std::to_string(L) + " has more words than the node budget", L,
                            static_cast<std::size_t>(words), cfg_.node_budget);
    level(L);
    std::lock_guard lock(mu_);
    const std::size_t total = static_cast<std::size_t>(words);
    std::vector<int> out(total);
    std::vector<int> prefix(L + 1, 0);  // prefix[i] = class of the first i letters
    Word w(L, 0);
    for (int i = 1; i <= L; ++i) prefix[i] = levels_[i].trans[static_cast<std::size_t>(prefix[i - 1]) * n_];
    for (std::size_t idx = 0; idx < total; ++idx) {
        out[idx] = prefix[L];
        // odometer increment, recomputing the changed suffix
        int pos = L - 1;
        while (pos >= 0 && w[pos] == n_ - 1) w[pos--] = 0;
        if (pos < 0) break;
        ++w[pos];
        for (int i = pos + 1; i <= L; ++i)
            prefix[i] = levels_[i].trans[static_cast<std::size_t>(prefix[i - 1]) * n_ + w[i - 1]];
    }
    return out;
}

fs::path GradedMonoid::cache_file(int L) const {
    return cfg_.cache_dir / (rel_.hash_hex() + "-" + flavor_name(flavor_) + "-" + std::to_string(L) + ".ybxc");
}

bool GradedMonoid::try_load(int L, Level& lv) const {
    if (cfg_.cache_dir.empty()) return false;
    std::ifstream in(cache_file(L));
    if (!in) return false;
    std::string magic, key;
    int version = 0, n = 0, len = 0, count = 0;
    std::size_t nodes = 0;
    std::string flavor;
    in >> magic >> version >> key >> n >> key >> len >> key >> flavor >> key >> count >> key >> nodes;
    const std::size_t expect = static_cast<std::size_t>(levels_[L - 1].count) * n_;
    if (!in || magic != "ybx-closure" || version != kCacheFormat || n != n_ || len != L ||
        flavor != flavor_name(flavor_) || nodes != expect)
        return false;
    lv.trans.resize(nodes);
    for (auto& t : lv.trans) {
        if (!(in >> t) || t < 0 || t >= count) return false;
    }
    lv.count = count;
    return true;
}

void GradedMonoid::store(int L, const Level& lv) const {
    if (cfg_.cache_dir.empty()) return;
    std::error_code ec;
    fs::create_directories(cfg_.cache_dir, ec);
    const fs::path target = cache_file(L);
    fs::path tmp = target;
    tmp += ".tmp" + std::to_string(reinterpret_cast<std::uintptr_t>(this));
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << "ybx-closure " << kCacheFormat << "\nn " << n_ << "\nL " << L << "\nflavor " << flavor_name(flavor_)
            << "\ncount " << lv.count << "\nnodes " << lv.trans.size() << "\n";
        for (std::size_t i = 0; i < lv.trans.size(); ++i) out << lv.trans[i] << ((i + 1) % 32 ? ' ' : '\n');
        out << '\n';
        if (!out) {
            fs::remove(tmp, ec);
            return;
        }
    }
    fs::rename(tmp, target, ec);
    if (ec) fs::remove(tmp, ec);
}

CacheInfo cache_info(const fs::path& dir) {
    CacheInfo info;
    std::error_code ec;
    if (!fs::is_directory(dir, ec)) return info;
    for (const auto& e : fs::directory_iterator(dir, ec))
        if (e.path().extension() == ".ybxc") {
            ++info.files;
            info.bytes += e.file_size(ec);
        }
    return info;
}

std::size_t cache_clear(const fs::path& dir) {
    std::size_t removed = 0;
    std::error_code ec;
    if (!fs::is_directory(dir, ec)) return 0;
    std::vector<fs::path> victims;
    for (const auto& e : fs::directory_iterator(dir, ec))
        if (e.path().extension() == ".ybxc") victims.push_back(e.path());
    for (const auto& p : victims)
        if (fs::remove(p, ec)) ++removed;
    return removed;
}

}  // namespace ybx
