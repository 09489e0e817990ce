#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "rectlevel/geometry.hpp"

namespace rectlevel {

class ParseError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Text format: first non-comment line "rects 1", then one rectangle per
// line as "x_min y_min x_max y_max". Lines starting with '#' and blank
// lines are ignored; ids follow line order.
Family read_instance(std::istream& in);
Family read_instance_file(const std::string& path);
Family read_instance_text(const std::string& text);

void write_instance(std::ostream& out, const Family& f);
std::string write_instance_text(const Family& f);
// Atomic: writes to a temp file in the same directory, then renames.
void write_instance_file(const std::string& path, const Family& f);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace rectlevel
