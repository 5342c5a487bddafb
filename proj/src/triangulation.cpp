#include "homarea/triangulation.hpp"

#include "homarea/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>

namespace homarea {

namespace {

int next3(int k) { return k == 2 ? 0 : k + 1; }
int prev3(int k) { return k == 0 ? 2 : k - 1; }

template <class W, class C> int orient_of(const C &a, const C &b, const C &c) {
    W d = W(b[0] - a[0]) * W(c[1] - a[1]) - W(b[1] - a[1]) * W(c[0] - a[0]);
    return d > 0 ? 1 : (d < 0 ? -1 : 0);
}

// > 0 when d lies inside the circumcircle of the counter-clockwise triangle abc.
template <class W, class C> int incircle_of(const C &a, const C &b, const C &c, const C &d) {
    W adx = a[0] - d[0], ady = a[1] - d[1];
    W bdx = b[0] - d[0], bdy = b[1] - d[1];
    W cdx = c[0] - d[0], cdy = c[1] - d[1];
    W det = (adx * adx + ady * ady) * (bdx * cdy - cdx * bdy) + (bdx * bdx + bdy * bdy) * (cdx * ady - adx * cdy) +
            (cdx * cdx + cdy * cdy) * (adx * bdy - bdx * ady);
    return det > 0 ? 1 : (det < 0 ? -1 : 0);
}

constexpr std::int64_t small_limit = std::int64_t(1) << 29;

} // namespace

Triangulation::Triangulation(std::vector<Point> points, const std::vector<std::pair<int, int>> &constraints,
                             const Rational &margin)
    : points_(std::move(points)) {
    if (points_.empty()) throw InternalError("triangulation needs at least one point");
    box_min_ = box_max_ = points_.front();
    for (const Point &p : points_) {
        if (p.x < box_min_.x) box_min_.x = p.x;
        if (p.y < box_min_.y) box_min_.y = p.y;
        if (p.x > box_max_.x) box_max_.x = p.x;
        if (p.y > box_max_.y) box_max_.y = p.y;
    }
    box_min_.x -= margin;
    box_min_.y -= margin;
    box_max_.x += margin;
    box_max_.y += margin;

    const int n = static_cast<int>(points_.size());
    points_.push_back({box_min_.x, box_min_.y});
    points_.push_back({box_max_.x, box_min_.y});
    points_.push_back({box_max_.x, box_max_.y});
    points_.push_back({box_min_.x, box_max_.y});
    vertex_tri_.assign(points_.size(), -1);
    build_integer_coords();

    verts_.push_back({n, n + 1, n + 2});
    verts_.push_back({n, n + 2, n + 3});
    nbrs_.push_back({-1, 1, -1});
    nbrs_.push_back({-1, -1, 0});
    constrained_.push_back({false, false, false});
    constrained_.push_back({false, false, false});
    touch(0);
    touch(1);

    // random insertion order keeps the expected flip count linear
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), std::mt19937_64(0x5eed));
    for (int p : order) insert_point(p);
    for (auto [a, b] : constraints) insert_constraint(a, b);
}

void Triangulation::build_integer_coords() {
    mpz_class scale = 1;
    for (const Point &p : points_) {
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), p.x.get_den_mpz_t());
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), p.y.get_den_mpz_t());
    }
    big_.resize(points_.size());
    use_small_ = true;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        for (int c = 0; c < 2; ++c) {
            Rational v = (c == 0 ? points_[i].x - box_min_.x : points_[i].y - box_min_.y) * scale;
            v.canonicalize();
            big_[i][c] = v.get_num();
            if (!big_[i][c].fits_slong_p() || big_[i][c] >= small_limit) use_small_ = false;
        }
    }
    if (use_small_) {
        small_.resize(points_.size());
        for (std::size_t i = 0; i < points_.size(); ++i)
            small_[i] = {big_[i][0].get_si(), big_[i][1].get_si()};
        big_.clear();
    }
}

int Triangulation::orient_v(int a, int b, int c) const {
    if (use_small_) return orient_of<std::int64_t>(small_[a], small_[b], small_[c]);
    return orient_of<mpz_class>(big_[a], big_[b], big_[c]);
}

int Triangulation::incircle_v(int a, int b, int c, int d) const {
    if (use_small_) return incircle_of<__int128>(small_[a], small_[b], small_[c], small_[d]);
    return incircle_of<mpz_class>(big_[a], big_[b], big_[c], big_[d]);
}

void Triangulation::touch(int t) {
    for (int v : verts_[t]) vertex_tri_[v] = t;
}

void Triangulation::replace_neighbor(int t, int old_nb, int new_nb) {
    if (t < 0) return;
    for (int &x : nbrs_[t])
        if (x == old_nb) {
            x = new_nb;
            return;
        }
    throw InternalError("broken triangle adjacency");
}

int Triangulation::opposite_index(int t, int other) const {
    // index in t of the vertex not shared with triangle `other`
    for (int k = 0; k < 3; ++k)
        if (nbrs_[t][k] == other) return k;
    throw InternalError("triangles are not adjacent");
}

void Triangulation::insert_point(int p) {
    const Point &q = points_[p];
    int t = last_;
    std::size_t guard = 0;
    for (;;) {
        if (++guard > 4 * verts_.size() + 16) throw InternalError("point location walk did not terminate");
        int moved = -1;
        int zero_edge = -1, zeros = 0;
        for (int k = 0; k < 3; ++k) {
            const auto &v = verts_[t];
            int o = orient_v(v[next3(k)], v[prev3(k)], p);
            if (o < 0) {
                moved = nbrs_[t][k];
                break;
            }
            if (o == 0) {
                ++zeros;
                zero_edge = k;
            }
        }
        if (moved >= 0) {
            t = moved;
            continue;
        }
        if (zeros > 1) throw InternalError("duplicate triangulation point " + to_string(q));
        if (zeros == 1) split_edge(t, zero_edge, p);
        else split_triangle(t, p);
        return;
    }
}

void Triangulation::split_triangle(int t, int p) {
    auto [a, b, c] = verts_[t];
    auto [na, nb, nc] = nbrs_[t];
    auto [ca, cb, cc] = constrained_[t];
    int t1 = static_cast<int>(verts_.size());
    int t2 = t1 + 1;
    verts_[t] = {a, b, p};
    nbrs_[t] = {t1, t2, nc};
    constrained_[t] = {false, false, cc};
    verts_.push_back({b, c, p});
    nbrs_.push_back({t2, t, na});
    constrained_.push_back({false, false, ca});
    verts_.push_back({c, a, p});
    nbrs_.push_back({t, t1, nb});
    constrained_.push_back({false, false, cb});
    replace_neighbor(na, t, t1);
    replace_neighbor(nb, t, t2);
    touch(t);
    touch(t1);
    touch(t2);
    last_ = t;
    legalize(t, p);
    legalize(t1, p);
    legalize(t2, p);
}

void Triangulation::split_edge(int t, int k, int p) {
    int a = verts_[t][k], b = verts_[t][next3(k)], c = verts_[t][prev3(k)];
    int u = nbrs_[t][k];
    if (u < 0) throw InternalError("point on the triangulation box boundary");
    int j = opposite_index(u, t);
    int d = verts_[u][j];
    int n_ab = nbrs_[t][prev3(k)], n_ca = nbrs_[t][next3(k)];
    bool c_ab = constrained_[t][prev3(k)], c_ca = constrained_[t][next3(k)];
    int n_bd = nbrs_[u][next3(j)], n_dc = nbrs_[u][prev3(j)];
    bool c_bd = constrained_[u][next3(j)], c_dc = constrained_[u][prev3(j)];
    bool c_bc = constrained_[t][k];

    int t1 = static_cast<int>(verts_.size());
    int u1 = t1 + 1;
    verts_[t] = {a, b, p};
    nbrs_[t] = {u, t1, n_ab};
    constrained_[t] = {c_bc, false, c_ab};
    verts_[u] = {d, p, b};
    nbrs_[u] = {t, n_bd, u1};
    constrained_[u] = {c_bc, c_bd, false};
    verts_.push_back({a, p, c});
    nbrs_.push_back({u1, n_ca, t});
    constrained_.push_back({c_bc, c_ca, false});
    verts_.push_back({d, c, p});
    nbrs_.push_back({t1, u, n_dc});
    constrained_.push_back({c_bc, false, c_dc});
    replace_neighbor(n_ca, t, t1);
    replace_neighbor(n_dc, u, u1);
    touch(t);
    touch(u);
    touch(t1);
    touch(u1);
    last_ = t;
    legalize(t, p);
    legalize(t1, p);
    legalize(u, p);
    legalize(u1, p);
}

void Triangulation::legalize(int start, int p) {
    std::vector<int> stack{start};
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        int k = 0;
        while (k < 3 && verts_[t][k] != p) ++k;
        if (k == 3) continue;
        int u = nbrs_[t][k];
        if (u < 0 || constrained_[t][k]) continue;
        int d = verts_[u][opposite_index(u, t)];
        const auto &v = verts_[t];
        if (incircle_v(v[0], v[1], v[2], d) > 0) {
            flip(t, k);
            stack.push_back(t);
            stack.push_back(u);
        }
    }
}

void Triangulation::flip(int t, int k) {
    int a = verts_[t][k], b = verts_[t][next3(k)], c = verts_[t][prev3(k)];
    int u = nbrs_[t][k];
    int j = opposite_index(u, t);
    int d = verts_[u][j];
    int n_ab = nbrs_[t][prev3(k)], n_ca = nbrs_[t][next3(k)];
    bool c_ab = constrained_[t][prev3(k)], c_ca = constrained_[t][next3(k)];
    int n_bd = nbrs_[u][next3(j)], n_dc = nbrs_[u][prev3(j)];
    bool c_bd = constrained_[u][next3(j)], c_dc = constrained_[u][prev3(j)];

    verts_[t] = {a, b, d};
    nbrs_[t] = {n_bd, u, n_ab};
    constrained_[t] = {c_bd, false, c_ab};
    verts_[u] = {a, d, c};
    nbrs_[u] = {n_dc, n_ca, t};
    constrained_[u] = {c_dc, c_ca, false};
    replace_neighbor(n_bd, u, t);
    replace_neighbor(n_ca, t, u);
    touch(t);
    touch(u);
    ++flips_;
}

Triangulation::Edge Triangulation::find_edge(int from, int to) const {
    int start = vertex_tri_[from];
    auto check = [&](int t) -> int {
        const auto &v = verts_[t];
        for (int i = 0; i < 3; ++i)
            if (v[i] == from && v[next3(i)] == to) return prev3(i);
        return -1;
    };
    auto index_of = [&](int t) {
        for (int i = 0; i < 3; ++i)
            if (verts_[t][i] == from) return i;
        throw InternalError("vertex-triangle map out of date");
    };
    // counter-clockwise around `from`, then clockwise if the box boundary stops us
    int t = start;
    do {
        if (int k = check(t); k >= 0) return {t, k};
        t = nbrs_[t][next3(index_of(t))];
    } while (t >= 0 && t != start);
    if (t < 0) {
        t = start;
        while (t >= 0) {
            if (int k = check(t); k >= 0) return {t, k};
            t = nbrs_[t][prev3(index_of(t))];
        }
    }
    throw InternalError("edge not present in triangulation");
}

void Triangulation::insert_constraint(int a, int b) {
    auto mark = [&](int x, int y) {
        Edge e = find_edge(x, y);
        constrained_[e.tri][e.index] = true;
        Edge f = find_edge(y, x);
        constrained_[f.tri][f.index] = true;
    };

    // Walk around a to the wedge containing b, or find the edge directly.
    int start = vertex_tri_[a];
    int t = start;
    int right = -1, left = -1;
    for (std::size_t guard = 0; guard < verts_.size() + 1; ++guard) {
        const auto &v = verts_[t];
        int i = 0;
        while (v[i] != a) ++i;
        int p = v[next3(i)], q = v[prev3(i)];
        if (p == b || q == b) {
            mark(a, b);
            return;
        }
        if (orient_v(a, p, b) > 0 && orient_v(a, q, b) < 0) {
            right = p;
            left = q;
            break;
        }
        t = nbrs_[t][next3(i)];
        if (t < 0) throw InternalError("constraint endpoint on the box boundary");
    }
    if (right < 0) throw InternalError("constraint wedge not found");

    std::deque<std::pair<int, int>> crossing;
    for (;;) {
        crossing.emplace_back(right, left);
        Edge e = find_edge(left, right);
        int r = verts_[e.tri][e.index];
        if (r == b) break;
        int o = orient_v(a, b, r);
        if (o == 0) throw InternalError("constraint passes through a vertex");
        if (o > 0) left = r;
        else right = r;
    }

    std::size_t stall = 0;
    while (!crossing.empty()) {
        auto [x, y] = crossing.front();
        crossing.pop_front();
        Edge e = find_edge(x, y);
        int w1 = verts_[e.tri][e.index];
        int u = nbrs_[e.tri][e.index];
        int w2 = verts_[u][opposite_index(u, e.tri)];
        if (orient_v(w1, w2, x) * orient_v(w1, w2, y) < 0) {
            flip(e.tri, e.index);
            stall = 0;
            bool crosses = w1 != a && w1 != b && w2 != a && w2 != b &&
                           orient_v(a, b, w1) * orient_v(a, b, w2) < 0 &&
                           orient_v(w1, w2, a) * orient_v(w1, w2, b) < 0;
            if (crosses) crossing.emplace_back(w1, w2);
        } else {
            crossing.emplace_back(x, y);
            if (++stall > crossing.size() + 1) throw InternalError("constraint insertion stalled");
        }
    }
    mark(a, b);
}

int Triangulation::locate(const Point &p) const {
    if (p.x < box_min_.x || p.x > box_max_.x || p.y < box_min_.y || p.y > box_max_.y) return -1;
    for (int t = 0; t < static_cast<int>(verts_.size()); ++t) {
        const auto &v = verts_[t];
        if (orient(points_[v[0]], points_[v[1]], p) >= 0 && orient(points_[v[1]], points_[v[2]], p) >= 0 &&
            orient(points_[v[2]], points_[v[0]], p) >= 0)
            return t;
    }
    return -1;
}

Point Triangulation::centroid(int t) const {
    const auto &v = verts_[t];
    const Point &a = points_[v[0]], &b = points_[v[1]], &c = points_[v[2]];
    return {(a.x + b.x + c.x) / 3, (a.y + b.y + c.y) / 3};
}

Rational Triangulation::area(int t) const {
    const auto &v = verts_[t];
    return cross(points_[v[0]], points_[v[1]], points_[v[2]]) / 2;
}

} // namespace homarea
