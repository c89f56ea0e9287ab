#ifndef BTDS_LAB_FIXTURES_HPP
#define BTDS_LAB_FIXTURES_HPP

#include <string>
#include <vector>

namespace btds::lab {

struct Fixture {
    std::string name;
    std::string text;  // instance document JSON
};

// The bundled regression fixtures, in report order. The declared claims state
// what the source material asserts; mismatches surface as findings.
const std::vector<Fixture>& builtin_fixtures();

}  // namespace btds::lab

#endif
