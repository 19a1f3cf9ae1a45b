// Generated by tests/oracles/generate.py (mpmath, 30 digits). Do not edit.
#pragma once

namespace chgoe::oracle {

struct LnGammaRow { double x; double value; };
inline constexpr LnGammaRow kLnGamma[] = {
    {5.0e-1, 5.7236494292470008707e-1},
    {1.5, -1.2078223763524522235e-1},
    {7.25, 7.0521854507385394449},
    {1.005e+2, 3.6143554046777762156e+2},
    {1.0005e+3, 5.9086741758486774887e+3},
};

struct LaguerreRow { double a; double mu; double y; double value; };
inline constexpr LaguerreRow kLaguerre[] = {
    {0, 0, -1, 1.0},
    {3, 1, -5.0e-1, -4.5125e+1},
    {5, 2, 2.5, 1.4796875e+2},
    {10, 0, -3.0, 8.219695239e+9},
    {12, 3, 7.75, -8.0152326520359563231e+9},
    {40, 1, -5.0, 4.4203449885560894866e+58},
    {25, 2, 3.0e+1, -4.390758493574755924e+30},
};

struct TricomiURow { double a; double b; double t; double log_value; };
inline constexpr TricomiURow kTricomiU[] = {
    {5.0e-1, 5.0e-1, 5.0e-2, 3.371194117550232453e-1},
    {1.5, -5.0e-1, 1.0, -1.7502890189051426644},
    {2.5, 1.5, 2.5e-1, -2.39518157546351854e-1},
    {6.0, 2.5, 3.0, -1.068585037929522105e+1},
    {2.05e+1, 5.0e-1, 1.0e-2, -4.26583351632473276e+1},
    {6.0e+1, -5.0e-1, 5.0, -2.1956458210862495202e+2},
    {2.005e+2, 2.5, 2.0e-3, -8.5182612479936385592e+2},
    {3.0, 3.5, 4.0e+1, -1.1102210775837237215e+1},
    {2.565e+2, 1.5, 4.8828125e-3, -1.1634833576497702799e+3},
};

struct BesselIRow { double n; double x; double log_value; };
inline constexpr BesselIRow kBesselI[] = {
    {0, 1.0e-1, 2.4984392338762433813e-3},
    {1, 2.5, 9.2295497451349354507e-1},
    {3, 1.0e+1, 7.4721486171486274998},
    {6, 4.5e+1, 4.1776615287401481177e+1},
    {2, 3.0e+2, 2.9622290979982373116e+2},
    {5, 9.0e+2, 8.9566610647287077137e+2},
};

struct BesselJRow { double n; double x; double value; };
inline constexpr BesselJRow kBesselJ[] = {
    {0, 1.0e-1, 9.9750156206604003228e-1},
    {1, 2.5, 4.9709410246427403801e-1},
    {-3, 1.0e+1, -5.8379379305186812343e-2},
    {4, 1.0e-1, 2.6028648545684032338e-7},
    {8, 4.5e+1, 7.0487187641406167767e-2},
};

struct BesselKHalfRow { double m; double x; double value; };
inline constexpr BesselKHalfRow kBesselKHalf[] = {
    {-1, 5.0e-1, 1.0750476034999202387},
    {0, 2.0, 1.1993777196806144737e-1},
    {1, 3.0e-1, 7.3456979108035600376},
    {3, 7.0, 9.5334765937837540818e-4},
    {6, 6.0e+1, 2.004158745652687776e-27},
};

struct PartitionZRow { double p; double nu; double value; };
inline constexpr PartitionZRow kPartitionZ[] = {
    {1, 0, 2.5066282746310005024},
    {2, 2, 1.6e+1},
    {5, 3, 7.962624e+8},
    {9, 8, 1.0465113496932374983e+52},
};

struct PartitionZtRow { double p; double gamma; double t; double value; };
inline constexpr PartitionZtRow kPartitionZt[] = {
    {1, 0, 5.0e-1, 1.5433068251712806253},
    {4, 1, 2.0, 1.124739414795330634e+4},
    {7, 0, 1.0e-1, 1.9139873257619776168e+11},
    {10, 1, 5.0, 4.5549165604381969172e+32},
};

struct SopNormRow { double j; double gamma; double t; double value; };
inline constexpr SopNormRow kSopNorm[] = {
    {0, 0, 1.0, 1.3772818303248061138},
    {1, 0, 1.0e-1, 1.3150891301959172104e+1},
    {2, 1, 5.0, 3.2376047053418078254e+4},
    {4, 1, 1.0, 4.590435490029464127e+11},
};

struct SopValueRow { double i; double gamma; double t; double y; double value; };
inline constexpr SopValueRow kSopValue[] = {
    {0, 0, 1.0, 2.0, 1.0},
    {1, 0, 1.0, 2.0, 1.0},
    {2, 1, 5.0e-1, 3.0, -2.6181163028464919186},
    {3, 1, 5.0e-1, -5.0e-1, -7.4442478369171357889e+1},
    {5, 0, 5.0, 1.0e+1, -6.576259064412904008e+3},
    {8, 1, 1.0e-1, 4.0, -6.4694141312084466222e+4},
};

struct SopWeightIntegralRow { double i; double gamma; double t; double value; };
inline constexpr SopWeightIntegralRow kSopWeightIntegral[] = {
    {0, 0, 1.0, 1.3113590848375969431},
    {1, 0, 1.0, 6.8864091516240305691e-1},
    {2, 1, 5.0e-1, 6.7369844570197218777},
    {5, 1, 2.0, 2.4840123570761351592e+1},
    {8, 0, 3.0e-1, 2.5101836057686589369e+4},
};

struct XiBigRow { double a; double b; double gamma; double l; double t; double value; };
inline constexpr XiBigRow kXiBig[] = {
    {0, 1, 0, 4, 5.0e-1, 2.0497366293530516031},
    {1, 2, 1, 6, 1.0, 4.7346075111315058765e+1},
    {0, 3, 0, 7, 2.0, 1.2099434361709386137e+5},
    {2, 3, 1, 9, 2.0e-1, 9.5542289085745439282e-4},
    {0, 1, 0, 20, 5.0e-2, 4.9057857590939184026e-1},
};

struct XiSmallRow { double a; double gamma; double l; double t; double value; };
inline constexpr XiSmallRow kXiSmall[] = {
    {0, 0, 5, 5.0e-1, 4.3245386523820128351},
    {2, 1, 7, 1.0, 6.6584822363984014818e+1},
    {1, 0, 15, 1.0e-1, 3.1446173078329765661},
};

struct KernelRow { double x; double y; double gamma; double l; double t; double value; };
inline constexpr KernelRow kKernel[] = {
    {5.0e-1, 2.0, 0, 4, 1.0, -1.8786544456697566332},
    {-1.0, 3.0, 1, 6, 5.0e-1, 1.0294433298388017409e+1},
    {1.5, 2.5e-1, 0, 10, 2.0, -1.5645475972779948306},
};

struct FiniteRow { double p; double k; double t; double gap; double smallest; };
inline constexpr FiniteRow kFinite[] = {
    {2, 0, 3.0e-1, 3.9583196461771004902e-1, 7.7289307574886805293e-1},
    {3, 1, 9.0e-1, 5.0790661758062169494e-1, 5.0063792960212613837e-1},
    {4, 2, 9.0e-1, 7.9408206347232644567e-1, 4.0766744282395952379e-1},
    {7, 3, 2.0e-1, 9.985931527089146356e-1, 2.3115171591562230247e-2},
    {7, 4, 1.5, 8.6723805125798367064e-1, 2.6244423513098787396e-1},
    {12, 2, 5.0e-2, 9.9720243000571167636e-1, 1.3443929263864188608e-1},
    {16, 3, 4.0e-1, 9.0805355041945882624e-1, 6.0459472616117709833e-1},
};

struct MicroRow { double k; double u; double gap; double smallest; };
inline constexpr MicroRow kMicro[] = {
    {0, 1.0, 5.3526142851899024196e-1, 2.0072303569462134073e-1},
    {1, 5.0e-1, 9.928163224731280484e-1, 2.1191296183411998893e-2},
    {1, 4.0, 8.6356328969547545173e-1, 4.4364882014152741514e-2},
    {2, 4.0, 9.9278268288553915978e-1, 4.2497957360722672137e-3},
    {2, 2.0e+1, 7.7588739694428158511e-1, 1.9713895057383649462e-2},
    {3, 9.0, 9.9736645847611122149e-1, 9.4952080786169565117e-4},
    {4, 6.0, 9.9998510146852629178e-1, 1.083205353071811643e-5},
};

struct MicroDensityRow { double nu; double u; double value; };
inline constexpr MicroDensityRow kMicroDensity[] = {
    {2, 1.0e-2, 3.1223966578427437526e-3},
    {2, 5.0, 4.5898217708044271316e-2},
    {4, 1.0e-2, 6.5071621364218149794e-7},
    {4, 3.0e+1, 2.1699948161495416839e-2},
    {6, 1.0e+2, 1.2852989060982105662e-2},
};

}  // namespace chgoe::oracle
