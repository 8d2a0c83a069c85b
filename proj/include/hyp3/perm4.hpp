#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace hyp3 {

// Permutation of {0,1,2,3}. perm[i] is the image of i.
class Perm4 {
public:
    Perm4() : img_{0, 1, 2, 3} {}
    Perm4(int a, int b, int c, int d) : img_{uint8_t(a), uint8_t(b), uint8_t(c), uint8_t(d)} {}

    int operator[](int i) const { return img_[i]; }
    bool operator==(const Perm4& o) const { return img_ == o.img_; }
    bool operator!=(const Perm4& o) const { return img_ != o.img_; }
    bool operator<(const Perm4& o) const { return img_ < o.img_; }

    Perm4 inverse() const {
        Perm4 r;
        for (int i = 0; i < 4; ++i) r.img_[img_[i]] = uint8_t(i);
        return r;
    }
    // (a.then(b))[i] == b[a[i]]
    Perm4 then(const Perm4& b) const {
        return Perm4(b.img_[img_[0]], b.img_[img_[1]], b.img_[img_[2]], b.img_[img_[3]]);
    }
    int sign() const {
        int s = 1;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (img_[i] > img_[j]) s = -s;
        return s;
    }
    bool isIdentity() const { return img_[0] == 0 && img_[1] == 1 && img_[2] == 2 && img_[3] == 3; }

    // Transposition (a b), identity if a == b.
    static Perm4 transposition(int a, int b) {
        Perm4 r;
        r.img_[a] = uint8_t(b);
        r.img_[b] = uint8_t(a);
        return r;
    }

    static std::optional<Perm4> fromDigits(std::string_view s) {
        if (s.size() != 4) return std::nullopt;
        bool seen[4] = {false, false, false, false};
        Perm4 r;
        for (int i = 0; i < 4; ++i) {
            char c = s[i];
            if (c < '0' || c > '3' || seen[c - '0']) return std::nullopt;
            seen[c - '0'] = true;
            r.img_[i] = uint8_t(c - '0');
        }
        return r;
    }
    std::string digits() const {
        std::string s(4, '0');
        for (int i = 0; i < 4; ++i) s[i] = char('0' + img_[i]);
        return s;
    }

    // Index in S4 enumerated lexicographically by digit string, 0..23.
    int index() const {
        int idx = 0;
        for (int i = 0; i < 4; ++i) {
            int smaller = 0;
            for (int j = i + 1; j < 4; ++j)
                if (img_[j] < img_[i]) ++smaller;
            static const int fact[4] = {6, 2, 1, 1};
            idx += smaller * fact[i];
        }
        return idx;
    }
    static Perm4 atIndex(int idx) {
        std::array<uint8_t, 4> pool = {0, 1, 2, 3};
        Perm4 r;
        static const int fact[4] = {6, 2, 1, 1};
        for (int i = 0; i < 4; ++i) {
            int k = idx / fact[i];
            idx %= fact[i];
            r.img_[i] = pool[k];
            for (int j = k; j < 3 - i; ++j) pool[j] = pool[j + 1];
        }
        return r;
    }

private:
    std::array<uint8_t, 4> img_;
};

// Edge numbering: 0=(0,1) 1=(0,2) 2=(0,3) 3=(1,2) 4=(1,3) 5=(2,3).
inline constexpr int kEdgeVerts[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

inline constexpr int kEdgeNum[4][4] = {
    {-1, 0, 1, 2},
    {0, -1, 3, 4},
    {1, 3, -1, 5},
    {2, 4, 5, -1},
};

// Quad type q in {0,1,2} separates {0,q+1} from the other pair.
// kQuadSep[a][b] = quad type separating vertices a,b from the rest.
inline constexpr int kQuadSep[4][4] = {
    {-1, 0, 1, 2},
    {0, -1, 2, 1},
    {1, 2, -1, 0},
    {2, 1, 0, -1},
};

// The two vertex pairs split by quad type q: {0,q+1} | kQuadPartner pair.
inline constexpr int kQuadPairA[3][2] = {{0, 1}, {0, 2}, {0, 3}};
inline constexpr int kQuadPairB[3][2] = {{2, 3}, {1, 3}, {1, 2}};

}  // namespace hyp3
