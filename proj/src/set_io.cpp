#include "schur/set_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace schur {

namespace {

std::string trimmed(const std::string& line) {
    const auto b = line.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = line.find_last_not_of(" \t\r\n");
    return line.substr(b, e - b + 1);
}

}  // namespace

IntegerSet read_set(std::istream& in) {
    std::string line;
    bool have_n = false;
    long long n = 0;
    std::vector<int> members;
    while (std::getline(in, line)) {
        const std::string t = trimmed(line);
        if (t.empty() || t[0] == '#') continue;
        if (!have_n && members.empty() && t.rfind("n=", 0) == 0) {
            n = std::stoll(t.substr(2));
            have_n = true;
            continue;
        }
        std::size_t pos = 0;
        const long long v = std::stoll(t, &pos);
        if (pos != t.size()) throw std::invalid_argument("bad set line: " + t);
        if (v < 1) throw std::invalid_argument("set members must be positive");
        members.push_back(static_cast<int>(v));
    }
    if (!have_n) n = members.empty() ? 0 : *std::max_element(members.begin(), members.end());
    return IntegerSet::from_members(static_cast<int>(n), members);
}

IntegerSet read_set_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open set file: " + path);
    return read_set(in);
}

void write_set(std::ostream& out, const IntegerSet& s) {
    out << "n=" << s.ground_size() << "\n";
    for (int m : s.members()) out << m << "\n";
}

void write_set_file(const std::string& path, const IntegerSet& s) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write set file: " + path);
    write_set(out, s);
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace schur
