#pragma once

#include <istream>
#include <string>
#include <vector>

#include "riocalc/rational.hpp"

namespace riocalc {

struct BFileEntry {
    long index;
    Rational value;
};

/// A parsed OEIS b-file: "index value" lines, '#' comments ignored,
/// indices strictly increasing.
struct BFile {
    std::string anumber;
    std::vector<BFileEntry> entries;

    std::vector<Rational> values() const {
        std::vector<Rational> out;
        out.reserve(entries.size());
        for (const auto& e : entries) out.push_back(e.value);
        return out;
    }
    long first_index() const { return entries.empty() ? 0 : entries.front().index; }
};

bool valid_anumber(const std::string& anumber);

BFile parse_bfile(const std::string& anumber, std::istream& in);

/// Resolution order for the fixture directory: explicit argument,
/// OEIS_CACHE_DIR, then the compiled-in default.
std::string default_fixture_dir();

/// Loads a b-file from the fixture directory; with `allow_network` set,
/// missing fixtures are fetched from oeis.org and cached there.
BFile oeis_load(const std::string& anumber, const std::string& fixture_dir,
                bool allow_network = false);

}  // namespace riocalc
