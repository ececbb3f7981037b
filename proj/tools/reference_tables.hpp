#pragma once

#include <array>
#include <optional>

#include "rsstilt/core.hpp"
#include "rsstilt/hypothesis.hpp"

// Published rejection rates for the standard simulation grid: sizes under
// perfect ranking, power under location shift, sizes under judgment ranking.
// Normal(0,1), Exponential(1) and Logistic(1,1); designs D1..D5.
namespace rsstilt::reference {

struct Entry {
  Family family;
  int design;
  double sigma_eps;
  double delta;
  TestMethod method;
  double rate;
};

inline constexpr std::array<Entry, 390> entries{{
    {Family::normal, 1, 0.0, 0.0, TestMethod::pt, 0.062},
    {Family::normal, 1, 0.0, 0.0, TestMethod::wt, 0.041},
    {Family::normal, 1, 0.0, 0.0, TestMethod::eat, 0.056},
    {Family::normal, 1, 0.0, 0.0, TestMethod::ear, 0.052},
    {Family::normal, 1, 0.0, 0.0, TestMethod::pb, 0.05},
    {Family::normal, 2, 0.0, 0.0, TestMethod::pt, 0.078},
    {Family::normal, 2, 0.0, 0.0, TestMethod::wt, 0.039},
    {Family::normal, 2, 0.0, 0.0, TestMethod::eat, 0.054},
    {Family::normal, 2, 0.0, 0.0, TestMethod::ear, 0.056},
    {Family::normal, 2, 0.0, 0.0, TestMethod::pb, 0.054},
    {Family::normal, 3, 0.0, 0.0, TestMethod::pt, 0.072},
    {Family::normal, 3, 0.0, 0.0, TestMethod::wt, 0.038},
    {Family::normal, 3, 0.0, 0.0, TestMethod::eat, 0.046},
    {Family::normal, 3, 0.0, 0.0, TestMethod::ear, 0.047},
    {Family::normal, 3, 0.0, 0.0, TestMethod::pb, 0.049},
    {Family::normal, 4, 0.0, 0.0, TestMethod::pt, 0.071},
    {Family::normal, 4, 0.0, 0.0, TestMethod::wt, 0.033},
    {Family::normal, 4, 0.0, 0.0, TestMethod::eat, 0.057},
    {Family::normal, 4, 0.0, 0.0, TestMethod::ear, 0.058},
    {Family::normal, 4, 0.0, 0.0, TestMethod::pb, 0.054},
    {Family::normal, 5, 0.0, 0.0, TestMethod::pt, 0.064},
    {Family::normal, 5, 0.0, 0.0, TestMethod::wt, 0.039},
    {Family::normal, 5, 0.0, 0.0, TestMethod::eat, 0.043},
    {Family::normal, 5, 0.0, 0.0, TestMethod::ear, 0.045},
    {Family::normal, 5, 0.0, 0.0, TestMethod::pb, 0.047},
    {Family::exponential, 1, 0.0, 0.0, TestMethod::pt, 0.107},
    {Family::exponential, 1, 0.0, 0.0, TestMethod::wt, 0.071},
    {Family::exponential, 1, 0.0, 0.0, TestMethod::eat, 0.081},
    {Family::exponential, 1, 0.0, 0.0, TestMethod::ear, 0.08},
    {Family::exponential, 1, 0.0, 0.0, TestMethod::pb, 0.051},
    {Family::exponential, 2, 0.0, 0.0, TestMethod::pt, 0.133},
    {Family::exponential, 2, 0.0, 0.0, TestMethod::wt, 0.072},
    {Family::exponential, 2, 0.0, 0.0, TestMethod::eat, 0.076},
    {Family::exponential, 2, 0.0, 0.0, TestMethod::ear, 0.079},
    {Family::exponential, 2, 0.0, 0.0, TestMethod::pb, 0.049},
    {Family::exponential, 3, 0.0, 0.0, TestMethod::pt, 0.132},
    {Family::exponential, 3, 0.0, 0.0, TestMethod::wt, 0.081},
    {Family::exponential, 3, 0.0, 0.0, TestMethod::eat, 0.089},
    {Family::exponential, 3, 0.0, 0.0, TestMethod::ear, 0.09},
    {Family::exponential, 3, 0.0, 0.0, TestMethod::pb, 0.054},
    {Family::exponential, 4, 0.0, 0.0, TestMethod::pt, 0.131},
    {Family::exponential, 4, 0.0, 0.0, TestMethod::wt, 0.073},
    {Family::exponential, 4, 0.0, 0.0, TestMethod::eat, 0.098},
    {Family::exponential, 4, 0.0, 0.0, TestMethod::ear, 0.094},
    {Family::exponential, 4, 0.0, 0.0, TestMethod::pb, 0.05},
    {Family::exponential, 5, 0.0, 0.0, TestMethod::pt, 0.098},
    {Family::exponential, 5, 0.0, 0.0, TestMethod::wt, 0.074},
    {Family::exponential, 5, 0.0, 0.0, TestMethod::eat, 0.058},
    {Family::exponential, 5, 0.0, 0.0, TestMethod::ear, 0.055},
    {Family::exponential, 5, 0.0, 0.0, TestMethod::pb, 0.053},
    {Family::logistic, 1, 0.0, 0.0, TestMethod::pt, 0.052},
    {Family::logistic, 1, 0.0, 0.0, TestMethod::wt, 0.042},
    {Family::logistic, 1, 0.0, 0.0, TestMethod::eat, 0.05},
    {Family::logistic, 1, 0.0, 0.0, TestMethod::ear, 0.051},
    {Family::logistic, 1, 0.0, 0.0, TestMethod::pb, 0.047},
    {Family::logistic, 2, 0.0, 0.0, TestMethod::pt, 0.076},
    {Family::logistic, 2, 0.0, 0.0, TestMethod::wt, 0.041},
    {Family::logistic, 2, 0.0, 0.0, TestMethod::eat, 0.058},
    {Family::logistic, 2, 0.0, 0.0, TestMethod::ear, 0.059},
    {Family::logistic, 2, 0.0, 0.0, TestMethod::pb, 0.05},
    {Family::logistic, 3, 0.0, 0.0, TestMethod::pt, 0.065},
    {Family::logistic, 3, 0.0, 0.0, TestMethod::wt, 0.033},
    {Family::logistic, 3, 0.0, 0.0, TestMethod::eat, 0.048},
    {Family::logistic, 3, 0.0, 0.0, TestMethod::ear, 0.05},
    {Family::logistic, 3, 0.0, 0.0, TestMethod::pb, 0.046},
    {Family::logistic, 4, 0.0, 0.0, TestMethod::pt, 0.068},
    {Family::logistic, 4, 0.0, 0.0, TestMethod::wt, 0.034},
    {Family::logistic, 4, 0.0, 0.0, TestMethod::eat, 0.059},
    {Family::logistic, 4, 0.0, 0.0, TestMethod::ear, 0.057},
    {Family::logistic, 4, 0.0, 0.0, TestMethod::pb, 0.051},
    {Family::logistic, 5, 0.0, 0.0, TestMethod::pt, 0.059},
    {Family::logistic, 5, 0.0, 0.0, TestMethod::wt, 0.034},
    {Family::logistic, 5, 0.0, 0.0, TestMethod::eat, 0.043},
    {Family::logistic, 5, 0.0, 0.0, TestMethod::ear, 0.044},
    {Family::logistic, 5, 0.0, 0.0, TestMethod::pb, 0.041},
    {Family::normal, 1, 0.0, 0.1, TestMethod::pt, 0.148},
    {Family::normal, 1, 0.0, 0.1, TestMethod::wt, 0.097},
    {Family::normal, 1, 0.0, 0.1, TestMethod::eat, 0.152},
    {Family::normal, 1, 0.0, 0.1, TestMethod::ear, 0.145},
    {Family::normal, 1, 0.0, 0.1, TestMethod::pb, 0.138},
    {Family::exponential, 1, 0.0, 0.1, TestMethod::pt, 0.229},
    {Family::exponential, 1, 0.0, 0.1, TestMethod::wt, 0.148},
    {Family::exponential, 1, 0.0, 0.1, TestMethod::eat, 0.222},
    {Family::exponential, 1, 0.0, 0.1, TestMethod::ear, 0.208},
    {Family::exponential, 1, 0.0, 0.1, TestMethod::pb, 0.209},
    {Family::logistic, 1, 0.0, 0.1, TestMethod::pt, 0.076},
    {Family::logistic, 1, 0.0, 0.1, TestMethod::wt, 0.049},
    {Family::logistic, 1, 0.0, 0.1, TestMethod::eat, 0.088},
    {Family::logistic, 1, 0.0, 0.1, TestMethod::ear, 0.088},
    {Family::logistic, 1, 0.0, 0.1, TestMethod::pb, 0.077},
    {Family::normal, 2, 0.0, 0.1, TestMethod::pt, 0.143},
    {Family::normal, 2, 0.0, 0.1, TestMethod::wt, 0.069},
    {Family::normal, 2, 0.0, 0.1, TestMethod::eat, 0.14},
    {Family::normal, 2, 0.0, 0.1, TestMethod::ear, 0.142},
    {Family::normal, 2, 0.0, 0.1, TestMethod::pb, 0.139},
    {Family::exponential, 2, 0.0, 0.1, TestMethod::pt, 0.227},
    {Family::exponential, 2, 0.0, 0.1, TestMethod::wt, 0.093},
    {Family::exponential, 2, 0.0, 0.1, TestMethod::eat, 0.216},
    {Family::exponential, 2, 0.0, 0.1, TestMethod::ear, 0.212},
    {Family::exponential, 2, 0.0, 0.1, TestMethod::pb, 0.208},
    {Family::logistic, 2, 0.0, 0.1, TestMethod::pt, 0.116},
    {Family::logistic, 2, 0.0, 0.1, TestMethod::wt, 0.052},
    {Family::logistic, 2, 0.0, 0.1, TestMethod::eat, 0.118},
    {Family::logistic, 2, 0.0, 0.1, TestMethod::ear, 0.125},
    {Family::logistic, 2, 0.0, 0.1, TestMethod::pb, 0.112},
    {Family::normal, 3, 0.0, 0.1, TestMethod::pt, 0.145},
    {Family::normal, 3, 0.0, 0.1, TestMethod::wt, 0.061},
    {Family::normal, 3, 0.0, 0.1, TestMethod::eat, 0.147},
    {Family::normal, 3, 0.0, 0.1, TestMethod::ear, 0.15},
    {Family::normal, 3, 0.0, 0.1, TestMethod::pb, 0.142},
    {Family::exponential, 3, 0.0, 0.1, TestMethod::pt, 0.255},
    {Family::exponential, 3, 0.0, 0.1, TestMethod::wt, 0.13},
    {Family::exponential, 3, 0.0, 0.1, TestMethod::eat, 0.255},
    {Family::exponential, 3, 0.0, 0.1, TestMethod::ear, 0.241},
    {Family::exponential, 3, 0.0, 0.1, TestMethod::pb, 0.242},
    {Family::logistic, 3, 0.0, 0.1, TestMethod::pt, 0.122},
    {Family::logistic, 3, 0.0, 0.1, TestMethod::wt, 0.037},
    {Family::logistic, 3, 0.0, 0.1, TestMethod::eat, 0.13},
    {Family::logistic, 3, 0.0, 0.1, TestMethod::ear, 0.128},
    {Family::logistic, 3, 0.0, 0.1, TestMethod::pb, 0.12},
    {Family::normal, 4, 0.0, 0.1, TestMethod::pt, 0.155},
    {Family::normal, 4, 0.0, 0.1, TestMethod::wt, 0.057},
    {Family::normal, 4, 0.0, 0.1, TestMethod::eat, 0.156},
    {Family::normal, 4, 0.0, 0.1, TestMethod::ear, 0.164},
    {Family::normal, 4, 0.0, 0.1, TestMethod::pb, 0.149},
    {Family::exponential, 4, 0.0, 0.1, TestMethod::pt, 0.216},
    {Family::exponential, 4, 0.0, 0.1, TestMethod::wt, 0.096},
    {Family::exponential, 4, 0.0, 0.1, TestMethod::eat, 0.216},
    {Family::exponential, 4, 0.0, 0.1, TestMethod::ear, 0.204},
    {Family::exponential, 4, 0.0, 0.1, TestMethod::pb, 0.205},
    {Family::logistic, 4, 0.0, 0.1, TestMethod::pt, 0.112},
    {Family::logistic, 4, 0.0, 0.1, TestMethod::wt, 0.032},
    {Family::logistic, 4, 0.0, 0.1, TestMethod::eat, 0.118},
    {Family::logistic, 4, 0.0, 0.1, TestMethod::ear, 0.12},
    {Family::logistic, 4, 0.0, 0.1, TestMethod::pb, 0.116},
    {Family::normal, 5, 0.0, 0.1, TestMethod::pt, 0.141},
    {Family::normal, 5, 0.0, 0.1, TestMethod::wt, 0.064},
    {Family::normal, 5, 0.0, 0.1, TestMethod::eat, 0.142},
    {Family::normal, 5, 0.0, 0.1, TestMethod::ear, 0.141},
    {Family::normal, 5, 0.0, 0.1, TestMethod::pb, 0.142},
    {Family::exponential, 5, 0.0, 0.1, TestMethod::pt, 0.19},
    {Family::exponential, 5, 0.0, 0.1, TestMethod::wt, 0.143},
    {Family::exponential, 5, 0.0, 0.1, TestMethod::eat, 0.187},
    {Family::exponential, 5, 0.0, 0.1, TestMethod::ear, 0.176},
    {Family::exponential, 5, 0.0, 0.1, TestMethod::pb, 0.164},
    {Family::logistic, 5, 0.0, 0.1, TestMethod::pt, 0.108},
    {Family::logistic, 5, 0.0, 0.1, TestMethod::wt, 0.034},
    {Family::logistic, 5, 0.0, 0.1, TestMethod::eat, 0.106},
    {Family::logistic, 5, 0.0, 0.1, TestMethod::ear, 0.102},
    {Family::logistic, 5, 0.0, 0.1, TestMethod::pb, 0.104},
    {Family::normal, 1, 0.0, 0.2, TestMethod::pt, 0.389},
    {Family::normal, 1, 0.0, 0.2, TestMethod::wt, 0.297},
    {Family::normal, 1, 0.0, 0.2, TestMethod::eat, 0.384},
    {Family::normal, 1, 0.0, 0.2, TestMethod::ear, 0.388},
    {Family::normal, 1, 0.0, 0.2, TestMethod::pb, 0.382},
    {Family::exponential, 1, 0.0, 0.2, TestMethod::pt, 0.416},
    {Family::exponential, 1, 0.0, 0.2, TestMethod::wt, 0.304},
    {Family::exponential, 1, 0.0, 0.2, TestMethod::eat, 0.412},
    {Family::exponential, 1, 0.0, 0.2, TestMethod::ear, 0.388},
    {Family::exponential, 1, 0.0, 0.2, TestMethod::pb, 0.38},
    {Family::logistic, 1, 0.0, 0.2, TestMethod::pt, 0.162},
    {Family::logistic, 1, 0.0, 0.2, TestMethod::wt, 0.102},
    {Family::logistic, 1, 0.0, 0.2, TestMethod::eat, 0.177},
    {Family::logistic, 1, 0.0, 0.2, TestMethod::ear, 0.184},
    {Family::logistic, 1, 0.0, 0.2, TestMethod::pb, 0.157},
    {Family::normal, 2, 0.0, 0.2, TestMethod::pt, 0.34},
    {Family::normal, 2, 0.0, 0.2, TestMethod::wt, 0.185},
    {Family::normal, 2, 0.0, 0.2, TestMethod::eat, 0.337},
    {Family::normal, 2, 0.0, 0.2, TestMethod::ear, 0.344},
    {Family::normal, 2, 0.0, 0.2, TestMethod::pb, 0.333},
    {Family::exponential, 2, 0.0, 0.2, TestMethod::pt, 0.375},
    {Family::exponential, 2, 0.0, 0.2, TestMethod::wt, 0.18},
    {Family::exponential, 2, 0.0, 0.2, TestMethod::eat, 0.375},
    {Family::exponential, 2, 0.0, 0.2, TestMethod::ear, 0.359},
    {Family::exponential, 2, 0.0, 0.2, TestMethod::pb, 0.347},
    {Family::logistic, 2, 0.0, 0.2, TestMethod::pt, 0.175},
    {Family::logistic, 2, 0.0, 0.2, TestMethod::wt, 0.085},
    {Family::logistic, 2, 0.0, 0.2, TestMethod::eat, 0.183},
    {Family::logistic, 2, 0.0, 0.2, TestMethod::ear, 0.191},
    {Family::logistic, 2, 0.0, 0.2, TestMethod::pb, 0.176},
    {Family::normal, 3, 0.0, 0.2, TestMethod::pt, 0.333},
    {Family::normal, 3, 0.0, 0.2, TestMethod::wt, 0.143},
    {Family::normal, 3, 0.0, 0.2, TestMethod::eat, 0.339},
    {Family::normal, 3, 0.0, 0.2, TestMethod::ear, 0.335},
    {Family::normal, 3, 0.0, 0.2, TestMethod::pb, 0.327},
    {Family::exponential, 3, 0.0, 0.2, TestMethod::pt, 0.405},
    {Family::exponential, 3, 0.0, 0.2, TestMethod::wt, 0.235},
    {Family::exponential, 3, 0.0, 0.2, TestMethod::eat, 0.399},
    {Family::exponential, 3, 0.0, 0.2, TestMethod::ear, 0.385},
    {Family::exponential, 3, 0.0, 0.2, TestMethod::pb, 0.386},
    {Family::logistic, 3, 0.0, 0.2, TestMethod::pt, 0.159},
    {Family::logistic, 3, 0.0, 0.2, TestMethod::wt, 0.057},
    {Family::logistic, 3, 0.0, 0.2, TestMethod::eat, 0.174},
    {Family::logistic, 3, 0.0, 0.2, TestMethod::ear, 0.175},
    {Family::logistic, 3, 0.0, 0.2, TestMethod::pb, 0.158},
    {Family::normal, 4, 0.0, 0.2, TestMethod::pt, 0.336},
    {Family::normal, 4, 0.0, 0.2, TestMethod::wt, 0.144},
    {Family::normal, 4, 0.0, 0.2, TestMethod::eat, 0.336},
    {Family::normal, 4, 0.0, 0.2, TestMethod::ear, 0.337},
    {Family::normal, 4, 0.0, 0.2, TestMethod::pb, 0.336},
    {Family::exponential, 4, 0.0, 0.2, TestMethod::pt, 0.381},
    {Family::exponential, 4, 0.0, 0.2, TestMethod::wt, 0.172},
    {Family::exponential, 4, 0.0, 0.2, TestMethod::eat, 0.379},
    {Family::exponential, 4, 0.0, 0.2, TestMethod::ear, 0.363},
    {Family::exponential, 4, 0.0, 0.2, TestMethod::pb, 0.36},
    {Family::logistic, 4, 0.0, 0.2, TestMethod::pt, 0.147},
    {Family::logistic, 4, 0.0, 0.2, TestMethod::wt, 0.058},
    {Family::logistic, 4, 0.0, 0.2, TestMethod::eat, 0.155},
    {Family::logistic, 4, 0.0, 0.2, TestMethod::ear, 0.158},
    {Family::logistic, 4, 0.0, 0.2, TestMethod::pb, 0.147},
    {Family::normal, 5, 0.0, 0.2, TestMethod::pt, 0.308},
    {Family::normal, 5, 0.0, 0.2, TestMethod::wt, 0.168},
    {Family::normal, 5, 0.0, 0.2, TestMethod::eat, 0.31},
    {Family::normal, 5, 0.0, 0.2, TestMethod::ear, 0.315},
    {Family::normal, 5, 0.0, 0.2, TestMethod::pb, 0.312},
    {Family::exponential, 5, 0.0, 0.2, TestMethod::pt, 0.19},
    {Family::exponential, 5, 0.0, 0.2, TestMethod::wt, 0.286},
    {Family::exponential, 5, 0.0, 0.2, TestMethod::eat, 0.187},
    {Family::exponential, 5, 0.0, 0.2, TestMethod::ear, 0.176},
    {Family::exponential, 5, 0.0, 0.2, TestMethod::pb, 0.164},
    {Family::logistic, 5, 0.0, 0.2, TestMethod::pt, 0.137},
    {Family::logistic, 5, 0.0, 0.2, TestMethod::wt, 0.064},
    {Family::logistic, 5, 0.0, 0.2, TestMethod::eat, 0.141},
    {Family::logistic, 5, 0.0, 0.2, TestMethod::ear, 0.134},
    {Family::logistic, 5, 0.0, 0.2, TestMethod::pb, 0.139},
    {Family::normal, 1, 0.0, 0.3, TestMethod::pt, 0.696},
    {Family::normal, 1, 0.0, 0.3, TestMethod::wt, 0.6},
    {Family::normal, 1, 0.0, 0.3, TestMethod::eat, 0.698},
    {Family::normal, 1, 0.0, 0.3, TestMethod::ear, 0.684},
    {Family::normal, 1, 0.0, 0.3, TestMethod::pb, 0.694},
    {Family::exponential, 1, 0.0, 0.3, TestMethod::pt, 0.644},
    {Family::exponential, 1, 0.0, 0.3, TestMethod::wt, 0.5},
    {Family::exponential, 1, 0.0, 0.3, TestMethod::eat, 0.65},
    {Family::exponential, 1, 0.0, 0.3, TestMethod::ear, 0.618},
    {Family::exponential, 1, 0.0, 0.3, TestMethod::pb, 0.603},
    {Family::logistic, 1, 0.0, 0.3, TestMethod::pt, 0.294},
    {Family::logistic, 1, 0.0, 0.3, TestMethod::wt, 0.215},
    {Family::logistic, 1, 0.0, 0.3, TestMethod::eat, 0.291},
    {Family::logistic, 1, 0.0, 0.3, TestMethod::ear, 0.302},
    {Family::logistic, 1, 0.0, 0.3, TestMethod::pb, 0.282},
    {Family::normal, 2, 0.0, 0.3, TestMethod::pt, 0.571},
    {Family::normal, 2, 0.0, 0.3, TestMethod::wt, 0.351},
    {Family::normal, 2, 0.0, 0.3, TestMethod::eat, 0.571},
    {Family::normal, 2, 0.0, 0.3, TestMethod::ear, 0.569},
    {Family::normal, 2, 0.0, 0.3, TestMethod::pb, 0.559},
    {Family::exponential, 2, 0.0, 0.3, TestMethod::pt, 0.553},
    {Family::exponential, 2, 0.0, 0.3, TestMethod::wt, 0.292},
    {Family::exponential, 2, 0.0, 0.3, TestMethod::eat, 0.563},
    {Family::exponential, 2, 0.0, 0.3, TestMethod::ear, 0.538},
    {Family::exponential, 2, 0.0, 0.3, TestMethod::pb, 0.517},
    {Family::logistic, 2, 0.0, 0.3, TestMethod::pt, 0.258},
    {Family::logistic, 2, 0.0, 0.3, TestMethod::wt, 0.145},
    {Family::logistic, 2, 0.0, 0.3, TestMethod::eat, 0.261},
    {Family::logistic, 2, 0.0, 0.3, TestMethod::ear, 0.261},
    {Family::logistic, 2, 0.0, 0.3, TestMethod::pb, 0.252},
    {Family::normal, 3, 0.0, 0.3, TestMethod::pt, 0.561},
    {Family::normal, 3, 0.0, 0.3, TestMethod::wt, 0.284},
    {Family::normal, 3, 0.0, 0.3, TestMethod::eat, 0.564},
    {Family::normal, 3, 0.0, 0.3, TestMethod::ear, 0.566},
    {Family::normal, 3, 0.0, 0.3, TestMethod::pb, 0.549},
    {Family::exponential, 3, 0.0, 0.3, TestMethod::pt, 0.604},
    {Family::exponential, 3, 0.0, 0.3, TestMethod::wt, 0.347},
    {Family::exponential, 3, 0.0, 0.3, TestMethod::eat, 0.598},
    {Family::exponential, 3, 0.0, 0.3, TestMethod::ear, 0.581},
    {Family::exponential, 3, 0.0, 0.3, TestMethod::pb, 0.568},
    {Family::logistic, 3, 0.0, 0.3, TestMethod::pt, 0.252},
    {Family::logistic, 3, 0.0, 0.3, TestMethod::wt, 0.093},
    {Family::logistic, 3, 0.0, 0.3, TestMethod::eat, 0.264},
    {Family::logistic, 3, 0.0, 0.3, TestMethod::ear, 0.264},
    {Family::logistic, 3, 0.0, 0.3, TestMethod::pb, 0.249},
    {Family::normal, 4, 0.0, 0.3, TestMethod::pt, 0.569},
    {Family::normal, 4, 0.0, 0.3, TestMethod::wt, 0.302},
    {Family::normal, 4, 0.0, 0.3, TestMethod::eat, 0.566},
    {Family::normal, 4, 0.0, 0.3, TestMethod::ear, 0.565},
    {Family::normal, 4, 0.0, 0.3, TestMethod::pb, 0.559},
    {Family::exponential, 4, 0.0, 0.3, TestMethod::pt, 0.524},
    {Family::exponential, 4, 0.0, 0.3, TestMethod::wt, 0.281},
    {Family::exponential, 4, 0.0, 0.3, TestMethod::eat, 0.518},
    {Family::exponential, 4, 0.0, 0.3, TestMethod::ear, 0.52},
    {Family::exponential, 4, 0.0, 0.3, TestMethod::pb, 0.501},
    {Family::logistic, 4, 0.0, 0.3, TestMethod::pt, 0.223},
    {Family::logistic, 4, 0.0, 0.3, TestMethod::wt, 0.102},
    {Family::logistic, 4, 0.0, 0.3, TestMethod::eat, 0.229},
    {Family::logistic, 4, 0.0, 0.3, TestMethod::ear, 0.232},
    {Family::logistic, 4, 0.0, 0.3, TestMethod::pb, 0.227},
    {Family::normal, 5, 0.0, 0.3, TestMethod::pt, 0.557},
    {Family::normal, 5, 0.0, 0.3, TestMethod::wt, 0.355},
    {Family::normal, 5, 0.0, 0.3, TestMethod::eat, 0.549},
    {Family::normal, 5, 0.0, 0.3, TestMethod::ear, 0.556},
    {Family::normal, 5, 0.0, 0.3, TestMethod::pb, 0.541},
    {Family::exponential, 5, 0.0, 0.3, TestMethod::pt, 0.64},
    {Family::exponential, 5, 0.0, 0.3, TestMethod::wt, 0.476},
    {Family::exponential, 5, 0.0, 0.3, TestMethod::eat, 0.621},
    {Family::exponential, 5, 0.0, 0.3, TestMethod::ear, 0.592},
    {Family::exponential, 5, 0.0, 0.3, TestMethod::pb, 0.573},
    {Family::logistic, 5, 0.0, 0.3, TestMethod::pt, 0.25},
    {Family::logistic, 5, 0.0, 0.3, TestMethod::wt, 0.129},
    {Family::logistic, 5, 0.0, 0.3, TestMethod::eat, 0.251},
    {Family::logistic, 5, 0.0, 0.3, TestMethod::ear, 0.252},
    {Family::logistic, 5, 0.0, 0.3, TestMethod::pb, 0.243},
    {Family::normal, 1, 0.5, 0.0, TestMethod::pt, 0.056},
    {Family::normal, 1, 0.5, 0.0, TestMethod::eat, 0.054},
    {Family::normal, 1, 0.5, 0.0, TestMethod::ear, 0.054},
    {Family::normal, 1, 1.0, 0.0, TestMethod::pt, 0.069},
    {Family::normal, 1, 1.0, 0.0, TestMethod::eat, 0.068},
    {Family::normal, 1, 1.0, 0.0, TestMethod::ear, 0.066},
    {Family::normal, 2, 0.5, 0.0, TestMethod::pt, 0.072},
    {Family::normal, 2, 0.5, 0.0, TestMethod::eat, 0.072},
    {Family::normal, 2, 0.5, 0.0, TestMethod::ear, 0.07},
    {Family::normal, 2, 1.0, 0.0, TestMethod::pt, 0.074},
    {Family::normal, 2, 1.0, 0.0, TestMethod::eat, 0.077},
    {Family::normal, 2, 1.0, 0.0, TestMethod::ear, 0.081},
    {Family::normal, 3, 0.5, 0.0, TestMethod::pt, 0.067},
    {Family::normal, 3, 0.5, 0.0, TestMethod::eat, 0.066},
    {Family::normal, 3, 0.5, 0.0, TestMethod::ear, 0.069},
    {Family::normal, 3, 1.0, 0.0, TestMethod::pt, 0.087},
    {Family::normal, 3, 1.0, 0.0, TestMethod::eat, 0.081},
    {Family::normal, 3, 1.0, 0.0, TestMethod::ear, 0.079},
    {Family::normal, 4, 0.5, 0.0, TestMethod::pt, 0.058},
    {Family::normal, 4, 0.5, 0.0, TestMethod::eat, 0.057},
    {Family::normal, 4, 0.5, 0.0, TestMethod::ear, 0.057},
    {Family::normal, 4, 1.0, 0.0, TestMethod::pt, 0.068},
    {Family::normal, 4, 1.0, 0.0, TestMethod::eat, 0.07},
    {Family::normal, 4, 1.0, 0.0, TestMethod::ear, 0.066},
    {Family::normal, 5, 0.5, 0.0, TestMethod::pt, 0.067},
    {Family::normal, 5, 0.5, 0.0, TestMethod::eat, 0.063},
    {Family::normal, 5, 0.5, 0.0, TestMethod::ear, 0.067},
    {Family::normal, 5, 1.0, 0.0, TestMethod::pt, 0.067},
    {Family::normal, 5, 1.0, 0.0, TestMethod::eat, 0.07},
    {Family::normal, 5, 1.0, 0.0, TestMethod::ear, 0.069},
    {Family::exponential, 1, 0.5, 0.0, TestMethod::pt, 0.073},
    {Family::exponential, 1, 0.5, 0.0, TestMethod::eat, 0.065},
    {Family::exponential, 1, 0.5, 0.0, TestMethod::ear, 0.068},
    {Family::exponential, 1, 1.0, 0.0, TestMethod::pt, 0.067},
    {Family::exponential, 1, 1.0, 0.0, TestMethod::eat, 0.059},
    {Family::exponential, 1, 1.0, 0.0, TestMethod::ear, 0.06},
    {Family::exponential, 2, 0.5, 0.0, TestMethod::pt, 0.084},
    {Family::exponential, 2, 0.5, 0.0, TestMethod::eat, 0.076},
    {Family::exponential, 2, 0.5, 0.0, TestMethod::ear, 0.079},
    {Family::exponential, 2, 1.0, 0.0, TestMethod::pt, 0.083},
    {Family::exponential, 2, 1.0, 0.0, TestMethod::eat, 0.078},
    {Family::exponential, 2, 1.0, 0.0, TestMethod::ear, 0.075},
    {Family::exponential, 3, 0.5, 0.0, TestMethod::pt, 0.099},
    {Family::exponential, 3, 0.5, 0.0, TestMethod::eat, 0.094},
    {Family::exponential, 3, 0.5, 0.0, TestMethod::ear, 0.094},
    {Family::exponential, 3, 1.0, 0.0, TestMethod::pt, 0.063},
    {Family::exponential, 3, 1.0, 0.0, TestMethod::eat, 0.058},
    {Family::exponential, 3, 1.0, 0.0, TestMethod::ear, 0.063},
    {Family::exponential, 4, 0.5, 0.0, TestMethod::pt, 0.103},
    {Family::exponential, 4, 0.5, 0.0, TestMethod::eat, 0.1},
    {Family::exponential, 4, 0.5, 0.0, TestMethod::ear, 0.099},
    {Family::exponential, 4, 1.0, 0.0, TestMethod::pt, 0.076},
    {Family::exponential, 4, 1.0, 0.0, TestMethod::eat, 0.082},
    {Family::exponential, 4, 1.0, 0.0, TestMethod::ear, 0.076},
    {Family::exponential, 5, 0.5, 0.0, TestMethod::pt, 0.078},
    {Family::exponential, 5, 0.5, 0.0, TestMethod::eat, 0.069},
    {Family::exponential, 5, 0.5, 0.0, TestMethod::ear, 0.07},
    {Family::exponential, 5, 1.0, 0.0, TestMethod::pt, 0.071},
    {Family::exponential, 5, 1.0, 0.0, TestMethod::eat, 0.067},
    {Family::exponential, 5, 1.0, 0.0, TestMethod::ear, 0.066},
    {Family::logistic, 1, 0.5, 0.0, TestMethod::pt, 0.06},
    {Family::logistic, 1, 0.5, 0.0, TestMethod::eat, 0.061},
    {Family::logistic, 1, 0.5, 0.0, TestMethod::ear, 0.061},
    {Family::logistic, 1, 1.0, 0.0, TestMethod::pt, 0.058},
    {Family::logistic, 1, 1.0, 0.0, TestMethod::eat, 0.061},
    {Family::logistic, 1, 1.0, 0.0, TestMethod::ear, 0.061},
    {Family::logistic, 2, 0.5, 0.0, TestMethod::pt, 0.071},
    {Family::logistic, 2, 0.5, 0.0, TestMethod::eat, 0.074},
    {Family::logistic, 2, 0.5, 0.0, TestMethod::ear, 0.074},
    {Family::logistic, 2, 1.0, 0.0, TestMethod::pt, 0.075},
    {Family::logistic, 2, 1.0, 0.0, TestMethod::eat, 0.076},
    {Family::logistic, 2, 1.0, 0.0, TestMethod::ear, 0.079},
    {Family::logistic, 3, 0.5, 0.0, TestMethod::pt, 0.077},
    {Family::logistic, 3, 0.5, 0.0, TestMethod::eat, 0.078},
    {Family::logistic, 3, 0.5, 0.0, TestMethod::ear, 0.079},
    {Family::logistic, 3, 1.0, 0.0, TestMethod::pt, 0.071},
    {Family::logistic, 3, 1.0, 0.0, TestMethod::eat, 0.072},
    {Family::logistic, 3, 1.0, 0.0, TestMethod::ear, 0.072},
    {Family::logistic, 4, 0.5, 0.0, TestMethod::pt, 0.078},
    {Family::logistic, 4, 0.5, 0.0, TestMethod::eat, 0.08},
    {Family::logistic, 4, 0.5, 0.0, TestMethod::ear, 0.08},
    {Family::logistic, 4, 1.0, 0.0, TestMethod::pt, 0.075},
    {Family::logistic, 4, 1.0, 0.0, TestMethod::eat, 0.079},
    {Family::logistic, 4, 1.0, 0.0, TestMethod::ear, 0.075},
    {Family::logistic, 5, 0.5, 0.0, TestMethod::pt, 0.068},
    {Family::logistic, 5, 0.5, 0.0, TestMethod::eat, 0.069},
    {Family::logistic, 5, 0.5, 0.0, TestMethod::ear, 0.065},
    {Family::logistic, 5, 1.0, 0.0, TestMethod::pt, 0.064},
    {Family::logistic, 5, 1.0, 0.0, TestMethod::eat, 0.06},
    {Family::logistic, 5, 1.0, 0.0, TestMethod::ear, 0.063},
}};

inline std::optional<double> lookup(Family f, int design, double sigma_eps, double delta, TestMethod m) {
  for (const auto& e : entries) {
    if (e.family == f && e.design == design && e.sigma_eps == sigma_eps && e.delta == delta && e.method == m) return e.rate;
  }
  return std::nullopt;
}

}  // namespace rsstilt::reference
