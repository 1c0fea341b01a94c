#pragma once

// Coefficient tables for diagonal-norm SBP operators, interior orders 2p = 2, 4, 6.
// First-derivative closures follow Strand (1994); the 2p=6 free parameter is
// x1 = 0.70127127127127 (the Q(4,5) entry), which the borrowing-lemma table
// requires.  Variable-coefficient second-derivative remainders follow
// Mattsson (2012) for 2p = 2, 4; the 2p = 6 closure is given in
// sbp1d_closure6.hpp.

#include <array>

namespace hsbp::tables {

// ---- norm weights (dimensionless; multiply by h) ----
inline constexpr std::array<double, 1> kH1{0.5};
inline constexpr std::array<double, 4> kH2{17.0 / 48.0, 59.0 / 48.0, 43.0 / 48.0, 49.0 / 48.0};
inline constexpr std::array<double, 6> kH3{13649.0 / 43200.0, 12013.0 / 8640.0, 2711.0 / 4320.0,
                                           5359.0 / 4320.0, 7877.0 / 8640.0, 43801.0 / 43200.0};

// ---- first-derivative boundary blocks (times 1/h) ----
inline constexpr int kD1Rows1 = 1, kD1Cols1 = 2;
inline constexpr double kD1Block1[kD1Rows1][kD1Cols1] = {{-1.0, 1.0}};
inline constexpr std::array<double, 3> kD1Interior1{-0.5, 0.0, 0.5};

inline constexpr int kD1Rows2 = 4, kD1Cols2 = 6;
inline constexpr double kD1Block2[kD1Rows2][kD1Cols2] = {
    {-24.0 / 17.0, 59.0 / 34.0, -4.0 / 17.0, -3.0 / 34.0, 0, 0},
    {-0.5, 0, 0.5, 0, 0, 0},
    {4.0 / 43.0, -59.0 / 86.0, 0, 59.0 / 86.0, -4.0 / 43.0, 0},
    {3.0 / 98.0, 0, -59.0 / 98.0, 0, 32.0 / 49.0, -4.0 / 49.0}};
inline constexpr std::array<double, 5> kD1Interior2{1.0 / 12.0, -2.0 / 3.0, 0.0, 2.0 / 3.0,
                                                    -1.0 / 12.0};

inline constexpr int kD1Rows3 = 6, kD1Cols3 = 9;
inline constexpr double kD1Block3[kD1Rows3][kD1Cols3] = {
    {-1.5825335189391163, 2.0333786787006759, -0.14151285874487429, -0.45039830657827062,
     0.10448806928404113, 0.036577936277543945, 0, 0, 0},
    {-0.46205919563115838, 0, 0.28725862297825089, 0.25881608737683154, -0.069112065532623654,
     -0.014903449191300358, 0, 0, 0},
    {0.071247104721829185, -0.63645109513790632, 0, 0.60623552360914601, -0.022902190275812615,
     -0.018129342917256215, 0, 0, 0},
    {0.11471331379897026, -0.29008748438681448, -0.30668119136114846, 0, 0.52026228505048155,
     -0.051642265516118481, 0.013435342414629596, 0, 0},
    {-0.036210680656541254, 0.10540094493378291, 0.01576433612739063, -0.70790544257598853, 0,
     0.76919941396264724, -0.16452964326520247, 0.018281071473911389, 0},
    {-0.011398193015049822, 0.020437334208704274, 0.011220896474665325, 0.06318369464187551,
     -0.69164902442681353, 0, 0.73970913906075197, -0.1479418278121504, 0.016437980868016708}};
inline constexpr std::array<double, 7> kD1Interior3{-1.0 / 60.0, 3.0 / 20.0, -3.0 / 4.0, 0.0,
                                                    3.0 / 4.0, -3.0 / 20.0, 1.0 / 60.0};

// ---- boundary first-derivative rows d0 (times 1/h) ----
inline constexpr std::array<double, 3> kD0Row1{-1.5, 2.0, -0.5};
inline constexpr std::array<double, 4> kD0Row2{-11.0 / 6.0, 3.0, -1.5, 1.0 / 3.0};
inline constexpr std::array<double, 5> kD0Row3{-25.0 / 12.0, 4.0, -3.0, 4.0 / 3.0, -0.25};

// ---- 2p = 4 second-derivative remainder (Mattsson 2012) ----
// R = (1/18) D3' W3 D3 + (1/144) D4' W4 D4  (all operators at h = 1)
// D3 special third-difference row (row 2), columns 0..5:
inline constexpr std::array<double, 6> kD3SpecialRow4{
    -185893.0 / 301051.0, 79000249461.0 / 54642863857.0, -33235054191.0 / 54642863857.0,
    -36887526683.0 / 54642863857.0, 26183621850.0 / 54642863857.0, -4386.0 / 181507.0};
inline constexpr double kC3w2 = 163928591571.0 / 53268010936.0;  // weight at row 2
inline constexpr double kC3w3 = 189284.0 / 185893.0;             // weight at rows 3, M-5
inline constexpr double kC4w2 = 1644330.0 / 301051.0;            // weight at rows 2, M-3
inline constexpr double kC4w3 = 156114.0 / 181507.0;             // weight at rows 3, M-4

}  // namespace hsbp::tables
