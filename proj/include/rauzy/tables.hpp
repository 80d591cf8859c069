#pragma once

#include <vector>

namespace rauzy {

// Census of classes with no unit cycles at sizes 4..8: invariant, sign and
// which of the two special families the class belongs to.
struct SmallClassRow {
    std::vector<int> lambda;  // sorted descending
    int rank = 0;
    int sign = 0;
    enum class Tag { None, Id, IdPrime } tag = Tag::None;
};

inline std::vector<SmallClassRow> small_size_table(int n) {
    using Tag = SmallClassRow::Tag;
    switch (n) {
        case 4:
            return {{{}, 3, -1, Tag::Id}};
        case 5:
            return {{{2}, 2, 0, Tag::Id}, {{3}, 1, -1, Tag::IdPrime}};
        case 6:
            return {{{}, 5, 1, Tag::Id}, {{2, 2}, 1, 0, Tag::IdPrime}, {{}, 5, -1, Tag::None}};
        case 7:
            return {{{3}, 3, 1, Tag::Id},   {{5}, 1, 1, Tag::IdPrime}, {{2}, 4, 0, Tag::None},
                    {{4}, 2, 0, Tag::None}, {{3}, 3, -1, Tag::None},   {{5}, 1, -1, Tag::None}};
        case 8:
            return {{{}, 7, 1, Tag::Id},       {{3, 3}, 1, 1, Tag::IdPrime},
                    {{2, 2}, 3, 0, Tag::None}, {{3, 2}, 2, 0, Tag::None},
                    {{4, 2}, 1, 0, Tag::None}, {{3, 3}, 1, -1, Tag::None},
                    {{}, 7, 1, Tag::None},     {{}, 7, -1, Tag::None}};
        default:
            return {};
    }
}

} // namespace rauzy
