#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace modscl {

/// Circularly ordered vertex labels in {1, .., p-1}. Equality is equality up
/// to rotation; canonical form = lexicographically least rotation. Segment i
/// joins vertex i to vertex i+1 (mod size).
class Circle {
public:
    Circle() = default;
    explicit Circle(std::vector<int> labels);

    const std::vector<int>& labels() const { return labels_; }
    std::size_t size() const { return labels_.size(); }
    bool empty() const { return labels_.empty(); }
    int label(std::size_t i) const { return labels_[i % labels_.size()]; }

    /// Canonical rotation (lexicographically least label sequence).
    Circle canonical() const;

    int ones() const;
    int count_label(int v) const;
    /// Longest cyclic run of 1s (whole circle if all 1s).
    int longest_one_run() const;
    /// Start index of the longest cyclic run of 1s.
    std::size_t longest_one_run_start() const;

    bool operator==(const Circle& o) const { return labels_ == o.labels_; }
    bool operator<(const Circle& o) const { return labels_ < o.labels_; }

    std::string str() const;

private:
    std::vector<int> labels_;
};

/// Digit-string literal, e.g. "11221", read cyclically.
Circle parse_circle(const std::string& text);

/// Multiset of circles plus the cone points produced so far.
struct CircleState {
    std::vector<Circle> circles;  ///< kept canonical and sorted
    std::vector<int> cone_orders;
    int p = 3;

    void normalize();
    bool done() const { return circles.empty(); }
    std::string str() const;
};

CircleState parse_circle_state(const std::string& text, int p = 3);

}  // namespace modscl
