#include <doctest.h>

#include <cstdlib>
#include <stdexcept>

#include "ilab/parallel.hpp"

using namespace ilab;

TEST_CASE("thread limit honours the environment") {
    setenv("INCIDENCE_LAB_THREADS", "3", 1);
    CHECK(thread_limit() == 3);
    setenv("INCIDENCE_LAB_THREADS", "junk", 1);
    CHECK(thread_limit() >= 1);
    unsetenv("INCIDENCE_LAB_THREADS");
    CHECK(thread_limit() >= 1);
}

TEST_CASE("every index runs exactly once") {
    std::vector<int> hits(1000, 0);
    parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; });
    for (int h : hits) CHECK(h == 1);
    parallel_for(0, [](std::size_t) { FAIL("no iterations expected"); });
}

TEST_CASE("lowest failing index wins") {
    setenv("INCIDENCE_LAB_THREADS", "4", 1);
    for (int round = 0; round < 20; ++round) {
        try {
            parallel_for(200, [](std::size_t i) {
                if (i % 37 == 5) throw std::runtime_error(std::to_string(i));
            });
            FAIL("expected an exception");
        } catch (const std::runtime_error& e) {
            CHECK(std::string(e.what()) == "5");
        }
    }
    unsetenv("INCIDENCE_LAB_THREADS");
}
