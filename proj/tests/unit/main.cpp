#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdint>
#include <cstring>
#include <string>
#include <vector>

namespace wrat::test {

namespace {
std::uint64_t g_seed = 0;
}

std::uint64_t seed() { return g_seed; }

} // namespace wrat::test

int main(int argc, char **argv) {
    std::vector<char *> rest;
    for (int i = 0; i < argc; ++i) {
        if (std::strncmp(argv[i], "--seed=", 7) == 0) {
            wrat::test::g_seed = std::stoull(argv[i] + 7);
        } else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
            wrat::test::g_seed = std::stoull(argv[++i]);
        } else {
            rest.push_back(argv[i]);
        }
    }
    doctest::Context context(static_cast<int>(rest.size()), rest.data());
    return context.run();
}
