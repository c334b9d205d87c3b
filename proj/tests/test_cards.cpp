#include "doctest.h"

#include "cards.hpp"
#include "fixtures.hpp"

using namespace shikaku;

TEST_CASE("board setup sizes and contents") {
    struct Case {
        const char* text;
        int rows, cols, zeros, dummies;
    };
    // 3x5 -> 5x7 board; 1x1 -> 3x3; the 7x7 instance -> 9x9.
    const Case cases[] = {
        {"3 5\n5 . . . .\n. . . . 5\n. . 5 . .\n", 5, 7, 15, 20},
        {"1 1\n1\n", 3, 3, 1, 8},
    };
    for (const Case& c : cases) {
        Puzzle puzzle = parse_puzzle(c.text);
        CardPool pool = CardPool::for_puzzle(puzzle);
        Transcript t;
        Board board(puzzle, pool, t);
        CHECK(board.geometry().rows() == c.rows);
        CHECK(board.geometry().cols() == c.cols);
        std::map<int, int> counts = board.covert_value_counts();
        CHECK(counts[0] == c.zeros);
        CHECK(counts[kDummy] == c.dummies);
        REQUIRE(t.events().size() == 1);
        CHECK(t.events()[0].type == EventType::place_public);
        CHECK(t.events()[0].count == c.rows * c.cols);
    }

    CardPool pool = CardPool::for_puzzle(example_7x7_puzzle());
    Transcript t;
    Board board(example_7x7_puzzle(), pool, t);
    std::map<int, int> counts = board.covert_value_counts();
    CHECK(board.geometry().rows() == 9);
    CHECK(board.geometry().cols() == 9);
    CHECK(counts[0] == 49);
    CHECK(counts[kDummy] == 32);
}

TEST_CASE("neighbor arithmetic follows the reading-order formulas") {
    SUBCASE("the n=5 example: i=9 has top 2 and bottom 16") {
        BoardGeometry geom{3, 5};
        CHECK(neighbor_index(9, Direction::top, geom) == 2);
        CHECK(neighbor_index(9, Direction::bottom, geom) == 16);
        CHECK(neighbor_index(9, Direction::left, geom) == 8);
        CHECK(neighbor_index(9, Direction::right, geom) == 10);
    }
    SUBCASE("left then right is the identity on interior cells") {
        BoardGeometry geom{4, 4};
        for (int i = 1; i <= geom.size(); ++i) {
            if (!geom.interior_linear(i)) continue;
            int left = neighbor_index(i, Direction::left, geom);
            CHECK(left + 1 == i);
            CHECK(neighbor_index(i, Direction::bottom, geom) -
                      neighbor_index(i, Direction::top, geom) ==
                  2 * geom.cols());
        }
    }
    SUBCASE("the 3x3 board of a 1x1 puzzle: i=5 has neighbors 4,6,2,8") {
        BoardGeometry geom{1, 1};
        CHECK(neighbor_index(5, Direction::left, geom) == 4);
        CHECK(neighbor_index(5, Direction::right, geom) == 6);
        CHECK(neighbor_index(5, Direction::top, geom) == 2);
        CHECK(neighbor_index(5, Direction::bottom, geom) == 8);
    }
    SUBCASE("border cells are a contract violation") {
        BoardGeometry geom{1, 1};
        CHECK_THROWS_AS(neighbor_index(1, Direction::left, geom),
                        std::invalid_argument);
        CHECK_THROWS_AS(neighbor_index(9, Direction::right, geom),
                        std::invalid_argument);
    }
}

TEST_CASE("linearization and coordinates are mutually inverse") {
    BoardGeometry geom{5, 3};
    for (int i = 1; i <= geom.size(); ++i) {
        Cell c = geom.cell_of_linear(i);
        CHECK(geom.linear(c.row, c.col) == i);
    }
}

TEST_CASE("encode and decode") {
    Inventory inv;
    inv.per_value = {{0, 10}, {1, 5}};
    CardPool pool(inv);

    SUBCASE("mod-3 encodings put the 1 at the value's position") {
        EncodedInt e = assemble_encoding(pool, 0, 3);
        PrivateScope audit;
        CHECK(e.cards[0].covert_value() == 1);
        CHECK(e.cards[1].covert_value() == 0);
        CHECK(e.cards[2].covert_value() == 0);
    }
    SUBCASE("mod-2 encoding of 1 is (0,1)") {
        EncodedInt e = assemble_encoding(pool, 1, 2);
        PrivateScope audit;
        CHECK(e.cards[0].covert_value() == 0);
        CHECK(e.cards[1].covert_value() == 1);
    }
    SUBCASE("round trip over every residue") {
        for (int m : {2, 3})
            for (int v = 0; v < m; ++v)
                CHECK(assemble_encoding(pool, v, m).covert_decode() == v);
    }
    SUBCASE("out-of-range values are refused") {
        CHECK_THROWS_AS(assemble_encoding(pool, 3, 3), std::invalid_argument);
        CHECK_THROWS_AS(assemble_encoding(pool, -1, 2), std::invalid_argument);
    }
}

TEST_CASE("negation swaps the two rightmost cards") {
    Inventory inv;
    inv.per_value = {{0, 10}, {1, 5}};
    CardPool pool(inv);

    EncodedInt zero = assemble_encoding(pool, 0, 3);
    negate_mod3(zero);
    CHECK(zero.covert_decode() == 0);  // -0 = 0

    EncodedInt one = assemble_encoding(pool, 1, 3);
    negate_mod3(one);
    CHECK(one.covert_decode() == 2);  // -1 = 2

    for (int v = 0; v < 3; ++v) {
        EncodedInt e = assemble_encoding(pool, v, 3);
        negate_mod3(e);
        negate_mod3(e);
        CHECK(e.covert_decode() == v);
    }
}

TEST_CASE("truncation to mod 2") {
    Inventory inv;
    inv.per_value = {{0, 10}, {1, 5}};
    CardPool pool(inv);

    for (int v : {0, 1}) {
        EncodedInt e = assemble_encoding(pool, v, 3);
        EncodedInt two = truncate_to_mod2(e);
        CHECK(two.covert_decode() == v);
        reattach_mod2(e, std::move(two));
        CHECK(e.covert_decode() == v);
    }

    // A dishonest 2 truncates to an all-zero pair: malformed, and flagged
    // later by the chosen cut's format reveal.
    EncodedInt e = assemble_encoding(pool, 2, 3);
    EncodedInt two = truncate_to_mod2(e);
    PrivateScope audit;
    CHECK(two.cards[0].covert_value() == 0);
    CHECK(two.cards[1].covert_value() == 0);
}

TEST_CASE("inventory counts") {
    SUBCASE("the 7x7 instance") {
        Inventory inv = inventory(example_7x7_puzzle());
        CHECK(inv.board_zeros == 49);
        CHECK(inv.dummies == 32);
        CHECK(inv.flood_ones == 8);  // max clue value
        CHECK(inv.clue_cards == 49);
        CHECK(inv.total == inv.dummies + inv.board_zeros + inv.flood_ones +
                               inv.helper_zeros + inv.helper_ones +
                               inv.clue_cards);
    }
    SUBCASE("the 1x1 instance") {
        Inventory inv = inventory(parse_puzzle("1 1\n1\n"));
        CHECK(inv.board_zeros == 1);
        CHECK(inv.dummies == 8);
        CHECK(inv.flood_ones == 1);
        CHECK(inv.clue_cards == 1);
        CHECK(inv.per_value.at(2) == 1);  // a single card bearing index 2
    }
    SUBCASE("totals stay under the documented linear bound") {
        for (const Fixture& f : domino_fixtures()) {
            Inventory inv = inventory(f.puzzle);
            CHECK(inv.total <= 18 * f.puzzle.cell_count() + 29);
        }
    }
}

TEST_CASE("face-down values are protected outside prover-marked code") {
    Inventory inv;
    inv.per_value = {{0, 2}};
    CardPool pool(inv);
    Card card = pool.take(0);

    CHECK_THROWS_AS(card.public_value(), audit_error);
    CHECK_THROWS_AS(card.covert_value(), audit_error);
    {
        PrivateScope prover;
        CHECK(card.covert_value() == 0);
    }
    CHECK(card.reveal() == 0);
    CHECK(card.public_value() == 0);
    card.hide();
    CHECK_THROWS_AS(card.public_value(), audit_error);
}

TEST_CASE("pool take and put track counts") {
    Inventory inv;
    inv.per_value = {{0, 2}, {1, 1}};
    CardPool pool(inv);
    CHECK(pool.available(0) == 2);
    Card c = pool.take(0);
    CHECK(pool.available(0) == 1);
    pool.put(c);
    CHECK(pool.available(0) == 2);
    CHECK_THROWS_AS(pool.take(5), std::logic_error);
    Card one = pool.take(1);
    pool.discard(one);
    CHECK(pool.available(1) == 0);
    CHECK(pool.discarded() == 1);
    CHECK(pool.audit_holdings()[1] == 1);
}
