#include "riocalc/bfile.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "riocalc/errors.hpp"

#ifdef RIOCALC_ENABLE_FETCH
#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "httplib.h"
#endif

#ifndef RIOCALC_FIXTURE_DIR
#define RIOCALC_FIXTURE_DIR "fixtures/oeis"
#endif

namespace riocalc {

bool valid_anumber(const std::string& anumber) {
    if (anumber.size() != 7 || anumber[0] != 'A') return false;
    for (size_t i = 1; i < anumber.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(anumber[i]))) return false;
    return true;
}

BFile parse_bfile(const std::string& anumber, std::istream& in) {
    if (!valid_anumber(anumber)) throw Error("bad OEIS number: " + anumber);
    BFile bf;
    bf.anumber = anumber;
    std::string line;
    int line_no = 0;
    bool have_prev = false;
    long prev_index = 0;
    while (std::getline(in, line)) {
        ++line_no;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        std::istringstream ls(line.substr(start));
        long index;
        std::string value;
        if (!(ls >> index >> value)) throw ParseError("expected \"index value\"", line_no);
        std::string rest;
        if (ls >> rest) throw ParseError("trailing content", line_no);
        Rational v;
        try {
            v = Rational::from_string(value);
        } catch (const Error&) {
            throw ParseError("bad integer value", line_no);
        }
        if (!v.is_integer()) throw ParseError("b-file values must be integers", line_no);
        if (have_prev && index <= prev_index)
            throw ParseError("indices must be strictly increasing", line_no);
        prev_index = index;
        have_prev = true;
        bf.entries.push_back({index, v});
    }
    return bf;
}

std::string default_fixture_dir() {
    if (const char* env = std::getenv("OEIS_CACHE_DIR"); env && *env) return env;
    return RIOCALC_FIXTURE_DIR;
}

namespace {
std::string bfile_path(const std::string& dir, const std::string& anumber) {
    return dir + "/b" + anumber.substr(1) + ".txt";
}

#ifdef RIOCALC_ENABLE_FETCH
std::string fetch_bfile_text(const std::string& anumber) {
    httplib::SSLClient client("oeis.org");
    client.set_follow_location(true);
    auto res = client.Get(("/" + anumber + "/b" + anumber.substr(1) + ".txt").c_str());
    if (!res || res->status != 200)
        throw FixtureMissing(anumber + " (network fetch failed)");
    return res->body;
}
#endif
}  // namespace

BFile oeis_load(const std::string& anumber, const std::string& fixture_dir, bool allow_network) {
    if (!valid_anumber(anumber)) throw Error("bad OEIS number: " + anumber);
    std::string dir = fixture_dir.empty() ? default_fixture_dir() : fixture_dir;
    std::string path = bfile_path(dir, anumber);
    std::ifstream in(path);
    if (in) return parse_bfile(anumber, in);
    if (!allow_network)
        throw FixtureMissing(anumber + " (no fixture at " + path + " and network disabled)");
#ifdef RIOCALC_ENABLE_FETCH
    std::string body = fetch_bfile_text(anumber);
    {
        std::ofstream out(path);
        if (out) out << body;
    }
    std::istringstream is(body);
    return parse_bfile(anumber, is);
#else
    throw FixtureMissing(anumber + " (built without network support)");
#endif
}

}  // namespace riocalc
