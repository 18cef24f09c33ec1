#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "umbral/groups.hpp"

#include <numeric>

using namespace umbral;

TEST_CASE("all 23 tables load and validate orthogonality") {
    // load() runs both orthogonality relations exactly; a throw fails the test.
    for (const auto& x : GroupTable::all_root_systems()) {
        const GroupTable& t = GroupTable::load(x);
        CHECK(t.num_classes() >= 1);
        long total_rank = 0;
        for (const auto& [ty, r, m] : t.root_system().components) total_rank += r * m;
        CHECK(total_rank == 24);
    }
}

TEST_CASE("known group orders derived from degrees") {
    CHECK(GroupTable::load("A1^24").group_order() == 244823040);
    CHECK(GroupTable::load("A2^12").group_order() == 190080);
    CHECK(GroupTable::load("A3^8").group_order() == 2688);
    CHECK(GroupTable::load("A4^6").group_order() == 240);
    CHECK(GroupTable::load("A5^4D4").group_order() == 48);
    CHECK(GroupTable::load("A6^4").group_order() == 24);
    CHECK(GroupTable::load("A7^2D5^2").group_order() == 8);
    CHECK(GroupTable::load("A8^3").group_order() == 12);
    CHECK(GroupTable::load("D4^6").group_order() == 2160);
    CHECK(GroupTable::load("D6^4").group_order() == 24);
    CHECK(GroupTable::load("D16E8").group_order() == 1);
}

TEST_CASE("specific character values") {
    const GroupTable& m24 = GroupTable::load("A1^24");
    CHECK(m24.chi(1, m24.class_index("2A")) == Cyclotomic(Rational(7l)));
    const GroupTable& m12 = GroupTable::load("A2^12");
    CHECK(m12.chi(3, m12.class_index("11A")) == Cyclotomic::b_n(11));
    const GroupTable& d4 = GroupTable::load("A7^2D5^2");
    CHECK(d4.num_classes() == 5);
    std::vector<long> degs;
    for (size_t i = 0; i < d4.num_chars(); ++i)
        degs.push_back(d4.chi(i, 0).rational_part().num().convert_to<long>());
    CHECK(degs == std::vector<long>{1, 1, 1, 1, 2});
}

TEST_CASE("centralizer orders") {
    const GroupTable& m24 = GroupTable::load("A1^24");
    CHECK(m24.centralizer_order("1A") == 244823040);
    CHECK(m24.centralizer_order("23A") == 23);
    for (const auto& x : GroupTable::all_root_systems()) {
        const GroupTable& t = GroupTable::load(x);
        CHECK(t.centralizer_order("1A") == t.group_order());
    }
}

TEST_CASE("degrees divide the group order") {
    for (const auto& x : GroupTable::all_root_systems()) {
        const GroupTable& t = GroupTable::load(x);
        for (size_t i = 0; i < t.num_chars(); ++i) {
            Int d = t.chi(i, 0).rational_part().num();
            CHECK(t.group_order() % d == 0);
        }
    }
}

TEST_CASE("power maps") {
    const GroupTable& m24 = GroupTable::load("A1^24");
    CHECK(m24.power_map("4A", 2) == "2A");
    CHECK(m24.power_map("1A", 2) == "1A");
    const GroupTable& m12 = GroupTable::load("A2^12");
    CHECK(m12.power_map("12A", 3) == "4A");
    CHECK_THROWS(m24.power_map("2A", 13));
}

TEST_CASE("power maps compatible with class orders") {
    for (const auto& x : GroupTable::all_root_systems()) {
        const GroupTable& t = GroupTable::load(x);
        for (const auto& cls : t.classes()) {
            long o = t.class_order(cls);
            for (long p : {2L, 3L, 5L, 7L, 11L, 23L}) {
                try {
                    const std::string& img = t.power_map(cls, p);
                    CHECK(t.class_order(img) == o / std::gcd(o, p));
                } catch (const std::domain_error&) {
                    // prime not tabulated for this group
                }
            }
        }
    }
}

TEST_CASE("conjugate character pairs are entrywise conjugates") {
    for (const auto& x : GroupTable::all_root_systems()) {
        const GroupTable& t = GroupTable::load(x);
        for (size_t i = 0; i < t.num_chars(); ++i) {
            if (t.frobenius_schur(i) != 'o') continue;
            bool found = false;
            for (size_t j = 0; j < t.num_chars() && !found; ++j) {
                if (j == i) continue;
                bool all = true;
                for (size_t g = 0; g < t.num_classes(); ++g)
                    if (t.chi(j, g) != t.chi(i, g).conj()) {
                        all = false;
                        break;
                    }
                found = all;
            }
            CHECK_MESSAGE(found, x, " char ", i, " has no conjugate partner");
        }
    }
}

TEST_CASE("twisted Euler characters") {
    const GroupTable& a124 = GroupTable::load("A1^24");
    CHECK(a124.twisted("3A").chiA_bar.value() == 6);
    CHECK(a124.twisted("3A").ng == 3);
    CHECK(a124.twisted("3A").hg == 1);
    const GroupTable& a212 = GroupTable::load("A2^12");
    CHECK(a212.twisted("2C").chiA_bar.value() == 4);
    CHECK(a212.twisted("2C").chiA.value() == -4);
    CHECK(a212.twisted("2C").ng == 2);
    CHECK(a212.twisted("2C").hg == 2);
    const GroupTable& d46 = GroupTable::load("D4^6");
    CHECK(d46.twisted("1A").chiD_check.value() == 12);
    // fusion resolution
    CHECK(a124.fused_label("7B") == "7AB");
    CHECK(a124.twisted("7B").chiA_bar.value() == 3);
}

TEST_CASE("twisted Euler values at the identity count components") {
    for (const auto& x : GroupTable::all_root_systems()) {
        const GroupTable& t = GroupTable::load(x);
        const TwistedEuler& te = t.twisted("1A");
        long na = 0, nd = 0, ne = 0;
        for (const auto& [ty, r, m] : t.root_system().components) {
            if (ty == 'A') na += m;
            if (ty == 'D') nd += m;
            if (ty == 'E') ne += m;
        }
        if (na) CHECK(te.chiA_bar.value() == na);
        if (nd) CHECK(te.chiD_bar.value() == nd);
        if (ne) CHECK(te.chiE_bar.value() == ne);
        CHECK(te.ng == 1);
        CHECK(te.hg == 1);
    }
}

TEST_CASE("I^X rule") {
    CHECK(GroupTable::load("A1^24").root_system().iset() == std::vector<long>{1});
    CHECK(GroupTable::load("A2^12").root_system().iset() == std::vector<long>{1, 2});
    CHECK(GroupTable::load("D4^6").root_system().iset() == std::vector<long>{1, 3});
    CHECK(GroupTable::load("D24").root_system().iset() ==
          std::vector<long>{1, 3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 23});
    CHECK(GroupTable::load("E6^4").root_system().iset() == std::vector<long>{1, 4, 5});
    CHECK(GroupTable::load("E8^3").root_system().iset() == std::vector<long>{1, 7});
    CHECK(GroupTable::load("D10E7^2").root_system().iset() == std::vector<long>{1, 3, 5, 7, 9});
}
