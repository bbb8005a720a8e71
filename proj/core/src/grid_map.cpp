#include "sympath/grid_map.hpp"

#include <deque>
#include <fstream>
#include <sstream>

namespace sympath {

namespace {

// Accepts both LF and CRLF input.
bool get_line(std::istream& in, std::string& line) {
    if (!std::getline(in, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
}

[[noreturn]] void fail(int line_no, const std::string& msg) {
    throw ParseError("line " + std::to_string(line_no) + ": " + msg);
}

}  // namespace

GridMap::GridMap(int width, int height, std::vector<uint8_t> blocked)
    : width_(width), height_(height), blocked_(std::move(blocked)) {
    if (width_ <= 0 || height_ <= 0) throw ParseError("map dimensions must be positive");
    if (static_cast<int>(blocked_.size()) != width_ * height_)
        throw ParseError("blocked vector size does not match dimensions");
    num_unblocked_ = 0;
    for (uint8_t b : blocked_)
        if (!b) num_unblocked_++;
}

GridMap GridMap::parse(std::istream& in) {
    std::string line;
    int line_no = 0;
    auto next = [&](const char* what) {
        if (!get_line(in, line)) fail(line_no + 1, std::string("missing ") + what);
        line_no++;
    };

    next("type header");
    if (line.rfind("type", 0) != 0) fail(line_no, "expected `type ...` header");
    int height = -1, width = -1;
    for (int i = 0; i < 2; i++) {
        next("height/width header");
        std::istringstream ss(line);
        std::string key;
        int value = -1;
        if (!(ss >> key >> value) || value <= 0) fail(line_no, "malformed header field");
        if (key == "height")
            height = value;
        else if (key == "width")
            width = value;
        else
            fail(line_no, "unknown header field `" + key + "`");
    }
    if (height <= 0 || width <= 0) fail(line_no, "missing height or width");
    next("map header");
    if (line != "map") fail(line_no, "expected `map`");

    std::vector<uint8_t> blocked(static_cast<size_t>(width) * height, 0);
    for (int y = 0; y < height; y++) {
        next("map row");
        if (static_cast<int>(line.size()) != width)
            fail(line_no, "row length " + std::to_string(line.size()) + " does not match width " +
                              std::to_string(width));
        for (int x = 0; x < width; x++) {
            char c = line[x];
            switch (c) {
                case '.':
                case 'G':
                    break;
                case '@':
                case 'O':
                case 'T':
                case 'S':
                case 'W':
                    blocked[y * width + x] = 1;
                    break;
                default:
                    fail(line_no, std::string("unknown map symbol `") + c + "`");
            }
        }
    }
    return GridMap(width, height, std::move(blocked));
}

GridMap GridMap::parse_text(const std::string& text) {
    std::istringstream in(text);
    return parse(in);
}

GridMap GridMap::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open map file " + path);
    return parse(in);
}

std::string GridMap::serialize() const {
    std::ostringstream out;
    out << "type octile\n";
    out << "height " << height_ << "\n";
    out << "width " << width_ << "\n";
    out << "map\n";
    for (int y = 0; y < height_; y++) {
        for (int x = 0; x < width_; x++) out << (blocked(x, y) ? '@' : '.');
        out << "\n";
    }
    return out.str();
}

std::pair<std::array<Vertex, 4>, int> GridMap::neighbors(Vertex v) const {
    std::array<Vertex, 4> out{};
    int n = 0;
    const int x = x_of(v), y = y_of(v);
    if (y > 0 && !blocked(x, y - 1)) out[n++] = v - width_;
    if (y + 1 < height_ && !blocked(x, y + 1)) out[n++] = v + width_;
    if (x > 0 && !blocked(x - 1, y)) out[n++] = v - 1;
    if (x + 1 < width_ && !blocked(x + 1, y)) out[n++] = v + 1;
    return {out, n};
}

std::vector<int> GridMap::true_distance(Vertex source) const {
    if (!passable(source)) throw std::invalid_argument("true_distance: blocked source");
    std::vector<int> dist(size(), kInfinity);
    std::deque<Vertex> queue;
    dist[source] = 0;
    queue.push_back(source);
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        auto [nbr, n] = neighbors(v);
        for (int i = 0; i < n; i++) {
            if (dist[nbr[i]] > dist[v] + 1) {
                dist[nbr[i]] = dist[v] + 1;
                queue.push_back(nbr[i]);
            }
        }
    }
    return dist;
}

}  // namespace sympath
