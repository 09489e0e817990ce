#include "rectlevel/instance_io.hpp"

#include <unistd.h>

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace rectlevel {

namespace {

bool blank(const std::string& line) {
    for (char c : line) {
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

}  // namespace

Family read_instance(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    std::vector<Rect> rects;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (blank(line) || line[0] == '#') continue;
        if (!header_seen) {
            std::istringstream head(line);
            std::string word;
            int version = 0;
            if (!(head >> word >> version) || word != "rects" || version != 1 ||
                (head >> word)) {
                std::ostringstream msg;
                msg << "line " << line_no << ": expected header \"rects 1\"";
                throw ParseError(msg.str());
            }
            header_seen = true;
            continue;
        }
        std::istringstream row(line);
        Coord x_min, y_min, x_max, y_max;
        std::string extra;
        if (!(row >> x_min >> y_min >> x_max >> y_max) || (row >> extra)) {
            std::ostringstream msg;
            msg << "line " << line_no
                << ": expected four integers \"x_min y_min x_max y_max\"";
            throw ParseError(msg.str());
        }
        for (Coord v : {x_min, y_min, x_max, y_max}) {
            if (v <= -kCoordLimit || v >= kCoordLimit) {
                std::ostringstream msg;
                msg << "line " << line_no << ": coordinate " << v
                    << " out of the exact range";
                throw ParseError(msg.str());
            }
        }
        if (x_min >= x_max || y_min >= y_max) {
            std::ostringstream msg;
            msg << "line " << line_no << ": rectangle has empty extent";
            throw ParseError(msg.str());
        }
        rects.push_back(Rect{0, x_min, y_min, x_max, y_max});
    }
    if (!header_seen) {
        throw ParseError("missing header \"rects 1\"");
    }
    return Family(std::move(rects));
}

Family read_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_instance(in);
}

Family read_instance_text(const std::string& text) {
    std::istringstream in(text);
    return read_instance(in);
}

void write_instance(std::ostream& out, const Family& f) {
    out << "rects 1\n";
    for (const Rect& r : f) {
        out << r.x_min << ' ' << r.y_min << ' ' << r.x_max << ' ' << r.y_max
            << '\n';
    }
}

std::string write_instance_text(const Family& f) {
    std::ostringstream out;
    write_instance(out, f);
    return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp" + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
        if (!out) throw std::runtime_error("write failed for " + tmp.string());
    }
    fs::rename(tmp, target);
}

void write_instance_file(const std::string& path, const Family& f) {
    write_text_file(path, write_instance_text(f));
}

}  // namespace rectlevel
