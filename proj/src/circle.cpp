#include "modscl/circle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace modscl {

Circle::Circle(std::vector<int> labels) : labels_(std::move(labels)) {
    for (int v : labels_)
        if (v < 1) throw std::invalid_argument("circle labels must be >= 1");
}

Circle Circle::canonical() const {
    if (labels_.size() <= 1) return *this;
    const std::size_t n = labels_.size();
    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            int a = labels_[(i + k) % n], b = labels_[(best + k) % n];
            if (a != b) {
                if (a < b) best = i;
                break;
            }
        }
    }
    std::vector<int> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = labels_[(best + k) % n];
    return Circle(std::move(out));
}

int Circle::ones() const { return count_label(1); }

int Circle::count_label(int v) const {
    int c = 0;
    for (int x : labels_)
        if (x == v) ++c;
    return c;
}

int Circle::longest_one_run() const {
    if (labels_.empty()) return 0;
    if (ones() == static_cast<int>(labels_.size())) return static_cast<int>(labels_.size());
    int best = 0, cur = 0;
    const std::size_t n = labels_.size();
    for (std::size_t i = 0; i < 2 * n; ++i) {
        if (labels_[i % n] == 1) {
            ++cur;
            best = std::max(best, std::min(cur, static_cast<int>(n)));
        } else {
            cur = 0;
        }
    }
    return best;
}

std::size_t Circle::longest_one_run_start() const {
    const std::size_t n = labels_.size();
    int want = longest_one_run();
    if (want == 0) return 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (labels_[s] != 1) continue;
        if (labels_[(s + n - 1) % n] == 1 && want < static_cast<int>(n)) continue;
        int run = 0;
        while (run < static_cast<int>(n) && labels_[(s + run) % n] == 1) ++run;
        if (run >= want) return s;
    }
    return 0;
}

std::string Circle::str() const {
    std::ostringstream out;
    for (int v : labels_) {
        if (v < 10) out << v;
        else out << "(" << v << ")";
    }
    return out.str();
}

Circle parse_circle(const std::string& text) {
    std::vector<int> labels;
    for (char c : text) {
        if (c == ' ') continue;
        if (c < '1' || c > '9') throw std::invalid_argument("circle literal must be digits 1-9");
        labels.push_back(c - '0');
    }
    if (labels.empty()) throw std::invalid_argument("empty circle literal");
    return Circle(std::move(labels));
}

void CircleState::normalize() {
    for (Circle& c : circles) c = c.canonical();
    std::sort(circles.begin(), circles.end());
    std::sort(cone_orders.begin(), cone_orders.end());
}

std::string CircleState::str() const {
    std::ostringstream out;
    bool first = true;
    for (const Circle& c : circles) {
        if (!first) out << ",";
        first = false;
        out << c.str();
    }
    if (circles.empty()) out << "-";
    return out.str();
}

CircleState parse_circle_state(const std::string& text, int p) {
    CircleState s;
    s.p = p;
    std::size_t i = 0;
    while (i < text.size()) {
        std::size_t j = text.find(',', i);
        if (j == std::string::npos) j = text.size();
        std::string tok = text.substr(i, j - i);
        if (!tok.empty()) s.circles.push_back(parse_circle(tok));
        i = j + 1;
    }
    if (s.circles.empty()) throw std::invalid_argument("empty circle state");
    for (const Circle& c : s.circles)
        for (int v : c.labels())
            if (v >= p) throw std::invalid_argument("circle label must be < p");
    s.normalize();
    return s;
}

}  // namespace modscl
