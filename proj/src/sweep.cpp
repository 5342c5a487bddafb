#include "homarea/sweep.hpp"

#include "homarea/errors.hpp"

#include <algorithm>

namespace homarea {

RepresentativeSet build_representatives(const Arrangement &arr) {
    const auto &ev = arr.events();
    const auto rank = q_ranks(arr);
    const Triangulation &tri = arr.triangulation();
    const bool closed_up = arr.q().front() == arr.q().back();
    const std::size_t last = ev.size() - 1;
    RepresentativeSet out;
    std::vector<Representative> all;
    for (std::size_t e = 0; e < ev.size(); ++e) {
        int x = arr.event_vertex(e), prev = arr.q_prev_vertex(e), next = arr.q_next_vertex(e);
        bool has_before = prev >= 0 && !(closed_up && rank[e] == 0);
        bool has_after = next >= 0 && !(closed_up && rank[e] == last);
        auto add = [&](Side side, Along along, int tri_id) {
            Representative r;
            r.event = e;
            r.side = side;
            r.along = along;
            r.key = 3 * static_cast<std::int64_t>(rank[e]) + (along == Along::before ? 0 : 2);
            r.cell = arr.cell_of_triangle(tri_id);
            all.push_back(r);
        };
        if (has_after) {
            add(Side::left, Along::after, tri.triangle_left_of(x, next));
            add(Side::right, Along::after, tri.triangle_left_of(next, x));
        }
        if (has_before) {
            add(Side::left, Along::before, tri.triangle_left_of(prev, x));
            add(Side::right, Along::before, tri.triangle_left_of(x, prev));
        }
    }
    std::sort(all.begin(), all.end(), [](const Representative &a, const Representative &b) {
        return a.side != b.side ? a.side < b.side : a.key < b.key;
    });
    for (std::size_t k = 0; k < all.size(); ++k) {
        all[k].id = static_cast<int>(k);
        (all[k].side == Side::left ? out.left : out.right).push_back(all[k]);
    }
    out.key_limit = 3 * static_cast<std::int64_t>(ev.size()) + 3;
    return out;
}

std::vector<int> uncovered_cells(const Arrangement &arr, const RepresentativeSet &reps) {
    std::vector<char> hit(arr.cells().size(), 0);
    for (const auto *side : {&reps.left, &reps.right})
        for (const Representative &r : *side) hit[r.cell] = 1;
    std::vector<int> out;
    for (std::size_t c = 0; c < hit.size(); ++c)
        if (!hit[c]) out.push_back(static_cast<int>(c));
    return out;
}

MinMax combine(const MinMax &a, const MinMax &b) {
    if (a.arg_min < 0) return b;
    if (b.arg_min < 0) return a;
    MinMax m;
    if (a.w_min < b.w_min || (a.w_min == b.w_min && a.arg_min < b.arg_min)) {
        m.w_min = a.w_min;
        m.arg_min = a.arg_min;
    } else {
        m.w_min = b.w_min;
        m.arg_min = b.arg_min;
    }
    if (a.w_max > b.w_max || (a.w_max == b.w_max && a.arg_max < b.arg_max)) {
        m.w_max = a.w_max;
        m.arg_max = a.arg_max;
    } else {
        m.w_max = b.w_max;
        m.arg_max = b.arg_max;
    }
    return m;
}

WindingIndex::WindingIndex(const std::vector<Representative> &reps) : n_(static_cast<int>(reps.size())) {
    for (const Representative &r : reps) {
        keys_.push_back(r.key);
        ids_.push_back(r.id);
    }
    reset();
}

void WindingIndex::reset() {
    const std::size_t size = n_ > 0 ? 4 * static_cast<std::size_t>(n_) : 0;
    add_.assign(size, 0);
    mn_.assign(size, 0);
    mx_.assign(size, 0);
    amn_.assign(size, -1);
    amx_.assign(size, -1);
    if (n_ == 0) return;
    // leaves start at winding 0; build the argument fields bottom-up
    auto build = [&](auto &&self, int v, int l, int r) -> void {
        if (l == r) {
            amn_[v] = amx_[v] = ids_[l];
            return;
        }
        int m = (l + r) / 2;
        self(self, 2 * v, l, m);
        self(self, 2 * v + 1, m + 1, r);
        pull(v);
    };
    build(build, 1, 0, n_ - 1);
}

void WindingIndex::pull(int v) {
    int a = 2 * v, b = 2 * v + 1;
    if (mn_[a] < mn_[b] || (mn_[a] == mn_[b] && amn_[a] < amn_[b])) {
        mn_[v] = mn_[a];
        amn_[v] = amn_[a];
    } else {
        mn_[v] = mn_[b];
        amn_[v] = amn_[b];
    }
    if (mx_[a] > mx_[b] || (mx_[a] == mx_[b] && amx_[a] < amx_[b])) {
        mx_[v] = mx_[a];
        amx_[v] = amx_[a];
    } else {
        mx_[v] = mx_[b];
        amx_[v] = amx_[b];
    }
    mn_[v] += add_[v];
    mx_[v] += add_[v];
}

void WindingIndex::update(int v, int l, int r, int ql, int qr, int delta) {
    ++visits_;
    if (ql <= l && r <= qr) {
        add_[v] += delta;
        mn_[v] += delta;
        mx_[v] += delta;
        return;
    }
    int m = (l + r) / 2;
    if (ql <= m) update(2 * v, l, m, ql, qr, delta);
    if (qr > m) update(2 * v + 1, m + 1, r, ql, qr, delta);
    pull(v);
}

void WindingIndex::range_add(std::int64_t lo, std::int64_t hi, int delta) {
    if (n_ == 0 || delta == 0) return;
    int ql = static_cast<int>(std::upper_bound(keys_.begin(), keys_.end(), lo) - keys_.begin());
    int qr = static_cast<int>(std::lower_bound(keys_.begin(), keys_.end(), hi) - keys_.begin()) - 1;
    if (ql > qr) return;
    ++updates_;
    update(1, 0, n_ - 1, ql, qr, delta);
}

void WindingIndex::add_all(int delta) {
    if (n_ == 0 || delta == 0) return;
    ++updates_;
    update(1, 0, n_ - 1, 0, n_ - 1, delta);
}

MinMax WindingIndex::query_minmax() const {
    if (n_ == 0) return {};
    return {mn_[1], mx_[1], amn_[1], amx_[1]};
}

int WindingIndex::value_at(std::size_t k) const {
    int v = 1, l = 0, r = n_ - 1, total = 0;
    const int target = static_cast<int>(k);
    while (true) {
        total += add_[v];
        if (l == r) return total;
        int m = (l + r) / 2;
        if (target <= m) {
            v = 2 * v;
            r = m;
        } else {
            v = 2 * v + 1;
            l = m + 1;
        }
    }
}

} // namespace homarea
