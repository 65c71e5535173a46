#pragma once

#include "gridndp/bigint.hpp"
#include "gridndp/geometry.hpp"

#include <optional>
#include <vector>

namespace gridndp {

// Finite union of rects in band normal form: maximal row bands, each holding
// sorted, disjoint, non-adjacent column intervals; vertically adjacent bands
// always differ. The form is canonical, so equality is structural.
class RegionSet {
public:
    struct Interval {
        Coord c1, c2;
        bool operator==(const Interval&) const = default;
    };
    struct Band {
        Coord r1, r2;
        std::vector<Interval> cols;
        bool operator==(const Band&) const = default;
    };

    RegionSet() = default;
    explicit RegionSet(const std::vector<Rect>& rects);

    static RegionSet from_rects(const std::vector<Rect>& rects) { return RegionSet(rects); }

    bool empty() const { return bands_.empty(); }
    bool contains(const Vertex& v) const;
    // Smallest vertex of the set inside r, if any.
    std::optional<Vertex> first_in(const Rect& r) const;
    bool intersects(const Rect& r) const { return first_in(r).has_value(); }
    bool covers(const Rect& r) const;

    RegionSet united(const RegionSet& o) const;
    RegionSet intersected(const RegionSet& o) const;
    RegionSet translated(Coord dr, Coord dc) const;

    std::vector<Rect> rects() const;  // one rect per (band, interval)
    const std::vector<Band>& bands() const { return bands_; }
    BigInt area() const;

    bool operator==(const RegionSet&) const = default;

private:
    std::vector<Band> bands_;
};

struct CutOutBox {
    GridSpec grid;   // box-local coordinates
    RegionSet deleted;

    // Surviving top-row columns as closed intervals, left to right.
    std::vector<RegionSet::Interval> opening() const;
    Coord opening_size() const;
    // Column of the j-th (1-based) opening vertex.
    Coord opening_col(Coord j) const;
    // 1-based rank of column col among the opening, or 0.
    Coord opening_rank(Coord col) const;
    bool is_cut_out() const;
};

}  // namespace gridndp
