#include "gridndp/region_set.hpp"

#include <algorithm>

namespace gridndp {

namespace {

using Interval = RegionSet::Interval;

std::vector<Interval> merge_intervals(std::vector<Interval> iv) {
    std::sort(iv.begin(), iv.end(), [](const Interval& a, const Interval& b) {
        return a.c1 < b.c1 || (a.c1 == b.c1 && a.c2 < b.c2);
    });
    std::vector<Interval> out;
    for (const auto& x : iv) {
        if (!out.empty() && x.c1 <= out.back().c2 + 1) out.back().c2 = std::max(out.back().c2, x.c2);
        else out.push_back(x);
    }
    return out;
}

}  // namespace

RegionSet::RegionSet(const std::vector<Rect>& input) {
    std::vector<Rect> rects;
    for (const auto& r : input)
        if (!r.empty()) rects.push_back(r);
    if (rects.empty()) return;
    std::vector<Coord> ys;
    ys.reserve(rects.size() * 2);
    for (const auto& r : rects) {
        ys.push_back(r.r1);
        ys.push_back(r.r2 + 1);
    }
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    std::sort(rects.begin(), rects.end(), [](const Rect& a, const Rect& b) { return a.r1 < b.r1; });

    // Slab sweep with an active list of rects covering the current slab.
    std::vector<Rect> active;
    std::size_t next = 0;
    for (std::size_t k = 0; k + 1 < ys.size(); ++k) {
        Coord y0 = ys[k], y1 = ys[k + 1] - 1;
        active.erase(std::remove_if(active.begin(), active.end(), [&](const Rect& r) { return r.r2 < y0; }),
                     active.end());
        while (next < rects.size() && rects[next].r1 <= y0) active.push_back(rects[next++]);
        if (active.empty()) continue;
        std::vector<Interval> iv;
        iv.reserve(active.size());
        for (const auto& r : active) iv.push_back({r.c1, r.c2});
        auto cols = merge_intervals(std::move(iv));
        if (!bands_.empty() && bands_.back().r2 + 1 == y0 && bands_.back().cols == cols) bands_.back().r2 = y1;
        else bands_.push_back({y0, y1, std::move(cols)});
    }
}

bool RegionSet::contains(const Vertex& v) const {
    auto it = std::lower_bound(bands_.begin(), bands_.end(), v.row,
                               [](const Band& b, Coord row) { return b.r2 < row; });
    if (it == bands_.end() || it->r1 > v.row) return false;
    auto jt = std::lower_bound(it->cols.begin(), it->cols.end(), v.col,
                               [](const Interval& x, Coord col) { return x.c2 < col; });
    return jt != it->cols.end() && jt->c1 <= v.col;
}

std::optional<Vertex> RegionSet::first_in(const Rect& r) const {
    if (r.empty()) return std::nullopt;
    auto it = std::lower_bound(bands_.begin(), bands_.end(), r.r1,
                               [](const Band& b, Coord row) { return b.r2 < row; });
    for (; it != bands_.end() && it->r1 <= r.r2; ++it) {
        auto jt = std::lower_bound(it->cols.begin(), it->cols.end(), r.c1,
                                   [](const Interval& x, Coord col) { return x.c2 < col; });
        if (jt != it->cols.end() && jt->c1 <= r.c2) return Vertex{std::max(it->r1, r.r1), std::max(jt->c1, r.c1)};
    }
    return std::nullopt;
}

bool RegionSet::covers(const Rect& r) const {
    if (r.empty()) return true;
    Coord row = r.r1;
    auto it = std::lower_bound(bands_.begin(), bands_.end(), r.r1,
                               [](const Band& b, Coord rr) { return b.r2 < rr; });
    while (row <= r.r2) {
        if (it == bands_.end() || it->r1 > row) return false;
        auto jt = std::lower_bound(it->cols.begin(), it->cols.end(), r.c1,
                                   [](const Interval& x, Coord col) { return x.c2 < col; });
        if (jt == it->cols.end() || jt->c1 > r.c1 || jt->c2 < r.c2) return false;
        row = it->r2 + 1;
        ++it;
    }
    return true;
}

std::vector<Rect> RegionSet::rects() const {
    std::vector<Rect> out;
    for (const auto& b : bands_)
        for (const auto& c : b.cols) out.push_back({b.r1, b.r2, c.c1, c.c2});
    return out;
}

RegionSet RegionSet::united(const RegionSet& o) const {
    auto a = rects();
    auto b = o.rects();
    a.insert(a.end(), b.begin(), b.end());
    return RegionSet(a);
}

RegionSet RegionSet::intersected(const RegionSet& o) const {
    std::vector<Rect> out;
    for (const auto& x : rects())
        for (const auto& y : o.rects())
            if (x.intersects(y)) out.push_back(x.intersect(y));
    return RegionSet(out);
}

RegionSet RegionSet::translated(Coord dr, Coord dc) const {
    RegionSet r = *this;
    for (auto& b : r.bands_) {
        b.r1 += dr;
        b.r2 += dr;
        for (auto& c : b.cols) {
            c.c1 += dc;
            c.c2 += dc;
        }
    }
    return r;
}

BigInt RegionSet::area() const {
    BigInt a = 0;
    for (const auto& b : bands_)
        for (const auto& c : b.cols) a += BigInt(b.r2 - b.r1 + 1) * BigInt(c.c2 - c.c1 + 1);
    return a;
}

std::vector<RegionSet::Interval> CutOutBox::opening() const {
    std::vector<RegionSet::Interval> out;
    Coord col = 1;
    const auto& bands = deleted.bands();
    auto it = std::find_if(bands.begin(), bands.end(), [](const RegionSet::Band& b) { return b.r1 <= 1 && b.r2 >= 1; });
    if (it != bands.end()) {
        for (const auto& c : it->cols) {
            if (c.c2 < 1) continue;
            if (c.c1 > col && col <= grid.length) out.push_back({col, std::min(c.c1 - 1, grid.length)});
            col = std::max(col, c.c2 + 1);
        }
    }
    if (col <= grid.length) out.push_back({col, grid.length});
    return out;
}

Coord CutOutBox::opening_size() const {
    Coord n = 0;
    for (const auto& i : opening()) n += i.c2 - i.c1 + 1;
    return n;
}

Coord CutOutBox::opening_col(Coord j) const {
    for (const auto& i : opening()) {
        Coord len = i.c2 - i.c1 + 1;
        if (j <= len) return i.c1 + j - 1;
        j -= len;
    }
    throw std::out_of_range("opening index out of range");
}

Coord CutOutBox::opening_rank(Coord col) const {
    Coord before = 0;
    for (const auto& i : opening()) {
        if (col >= i.c1 && col <= i.c2) return before + (col - i.c1) + 1;
        before += i.c2 - i.c1 + 1;
    }
    return 0;
}

bool CutOutBox::is_cut_out() const {
    return deleted.covers({1, grid.height, 1, 1}) && deleted.covers({1, grid.height, grid.length, grid.length}) &&
           deleted.covers({grid.height, grid.height, 1, grid.length});
}

}  // namespace gridndp
