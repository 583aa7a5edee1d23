#include "doctest.h"
#include "rng.hpp"
#include "vertex_set.hpp"

using namespace eajr;

TEST_CASE("cardinality equals popcount and ops preserve the universe") {
    VertexSet s(130);
    CHECK(s.count() == 0);
    s.set(0);
    s.set(64);
    s.set(129);
    CHECK(s.count() == 3);
    CHECK(s.test(64));
    s.reset(64);
    CHECK(!s.test(64));
    CHECK(s.count() == 2);

    VertexSet t = VertexSet::full(130);
    CHECK(t.count() == 130);
    CHECK((s & t) == s);
    CHECK((s | t) == t);
    CHECK(difference(t, s).count() == 128);
    CHECK((s ^ s).none());
    CHECK(t.complement().none());
    CHECK((s & t).universe() == 130);
}

TEST_CASE("iteration visits members in ascending order") {
    VertexSet s = VertexSet::of(200, {5, 64, 65, 127, 128, 199});
    std::vector<int> seen;
    s.for_each([&](int v) { seen.push_back(v); });
    CHECK(seen == std::vector<int>{5, 64, 65, 127, 128, 199});
    CHECK(s.next(66) == 127);
    CHECK(s.next(199) == 199);
    CHECK(s.next(200) == -1);
}

TEST_CASE("next_common scans the intersection") {
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + static_cast<int>(rng.below(150));
        VertexSet a(n), b(n);
        for (int v = 0; v < n; ++v) {
            if (rng.bernoulli(0.3)) a.set(v);
            if (rng.bernoulli(0.3)) b.set(v);
        }
        VertexSet both = a & b;
        std::vector<int> expect = both.to_vector();
        std::vector<int> got;
        for (int v = a.next_common(b); v >= 0; v = a.next_common(b, v + 1)) got.push_back(v);
        CHECK(got == expect);
        CHECK(a.count_and(b) == static_cast<int>(expect.size()));
        CHECK(a.count_minus(b) == a.count() - a.count_and(b));
    }
}

TEST_CASE("subset and intersection predicates") {
    VertexSet a = VertexSet::of(70, {1, 2, 3});
    VertexSet b = VertexSet::of(70, {1, 2, 3, 68});
    CHECK(a.is_subset_of(b));
    CHECK(!b.is_subset_of(a));
    CHECK(a.intersects(b));
    CHECK(!a.intersects(VertexSet::of(70, {68})));
}
