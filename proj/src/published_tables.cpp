#include "fde/experiment.hpp"

namespace fde {

// Reference values reproduced by `fde table`: table id, alpha, beta, size, kind, [it], [ms], kappa.
const std::vector<PublishedCell>& published_cells()
{
    using K = PreconditionerKind;
    static const std::vector<PublishedCell> cells{
        {1, 1.2, std::nullopt, 64, K::Identity, 28.0, 9.4, 9.6},
        {1, 1.2, std::nullopt, 64, K::Circulant, 13.0, 19.1, 3.3},
        {1, 1.2, std::nullopt, 64, K::FullSymbol, 14.0, 10.5, 1.6},
        {1, 1.2, std::nullopt, 64, K::SymbolTau1D, 7.2, 9.0, 30.8},
        {1, 1.2, std::nullopt, 128, K::Identity, 39.0, 56.2, 11.5},
        {1, 1.2, std::nullopt, 128, K::Circulant, 14.0, 101.4, 3.6},
        {1, 1.2, std::nullopt, 128, K::FullSymbol, 14.0, 43.4, 1.8},
        {1, 1.2, std::nullopt, 128, K::SymbolTau1D, 8.6, 36.0, 63.7},
        {1, 1.2, std::nullopt, 256, K::Identity, 46.0, 250.4, 13.4},
        {1, 1.2, std::nullopt, 256, K::Circulant, 13.0, 253.5, 3.8},
        {1, 1.2, std::nullopt, 256, K::FullSymbol, 14.0, 180.2, 2.0},
        {1, 1.2, std::nullopt, 256, K::SymbolTau1D, 9.9, 165.8, 132.2},
        {1, 1.2, std::nullopt, 512, K::Identity, 51.0, 1070.0, 15.5},
        {1, 1.2, std::nullopt, 512, K::Circulant, 12.0, 1123.0, 4.2},
        {1, 1.2, std::nullopt, 512, K::FullSymbol, 13.0, 710.4, 2.2},
        {1, 1.2, std::nullopt, 512, K::SymbolTau1D, 9.9, 695.4, 274.7},
        {1, 1.5, std::nullopt, 64, K::Identity, 32.0, 10.2, 33.4},
        {1, 1.5, std::nullopt, 64, K::Circulant, 12.0, 18.4, 7.1},
        {1, 1.5, std::nullopt, 64, K::FullSymbol, 13.0, 10.3, 1.8},
        {1, 1.5, std::nullopt, 64, K::SymbolTau1D, 6.7, 9.1, 16.1},
        {1, 1.5, std::nullopt, 128, K::Identity, 60.0, 83.7, 51.2},
        {1, 1.5, std::nullopt, 128, K::Circulant, 12.0, 92.7, 9.2},
        {1, 1.5, std::nullopt, 128, K::FullSymbol, 13.0, 43.2, 2.1},
        {1, 1.5, std::nullopt, 128, K::SymbolTau1D, 8.0, 33.7, 33.3},
        {1, 1.5, std::nullopt, 256, K::Identity, 89.0, 472.3, 75.8},
        {1, 1.5, std::nullopt, 256, K::Circulant, 12.0, 238.8, 12.0},
        {1, 1.5, std::nullopt, 256, K::FullSymbol, 13.0, 175.6, 2.3},
        {1, 1.5, std::nullopt, 256, K::SymbolTau1D, 8.5, 155.4, 70.9},
        {1, 1.5, std::nullopt, 512, K::Identity, 122.0, 2741.0, 109.9},
        {1, 1.5, std::nullopt, 512, K::Circulant, 12.0, 1113.0, 15.8},
        {1, 1.5, std::nullopt, 512, K::FullSymbol, 12.0, 701.0, 2.6},
        {1, 1.5, std::nullopt, 512, K::SymbolTau1D, 10.0, 679.8, 152.7},
        {1, 1.8, std::nullopt, 64, K::Identity, 32.0, 10.1, 136.5},
        {1, 1.8, std::nullopt, 64, K::Circulant, 9.0, 15.4, 23.0},
        {1, 1.8, std::nullopt, 64, K::FullSymbol, 10.0, 9.4, 2.6},
        {1, 1.8, std::nullopt, 64, K::SymbolTau1D, 6.1, 9.2, 9.7},
        {1, 1.8, std::nullopt, 128, K::Identity, 67.0, 97.1, 266.3},
        {1, 1.8, std::nullopt, 128, K::Circulant, 9.0, 74.7, 37.8},
        {1, 1.8, std::nullopt, 128, K::FullSymbol, 11.0, 39.5, 2.8},
        {1, 1.8, std::nullopt, 128, K::SymbolTau1D, 6.8, 33.4, 19.5},
        {1, 1.8, std::nullopt, 256, K::Identity, 131.0, 784.0, 494.8},
        {1, 1.8, std::nullopt, 256, K::Circulant, 9.0, 207.5, 63.0},
        {1, 1.8, std::nullopt, 256, K::FullSymbol, 10.0, 156.8, 2.9},
        {1, 1.8, std::nullopt, 256, K::SymbolTau1D, 7.0, 150.5, 40.8},
        {1, 1.8, std::nullopt, 512, K::Identity, 231.2, 6682.0, 893.8},
        {1, 1.8, std::nullopt, 512, K::Circulant, 9.0, 947.7, 106.3},
        {1, 1.8, std::nullopt, 512, K::FullSymbol, 9.0, 620.6, 2.9},
        {1, 1.8, std::nullopt, 512, K::SymbolTau1D, 8.6, 638.2, 86.9},
        {2, 1.2, std::nullopt, 64, K::Deriv1, 8.0, 7.3, 1.2},
        {2, 1.2, std::nullopt, 64, K::Deriv2, 9.0, 7.4, 2.1},
        {2, 1.2, std::nullopt, 64, K::TridiagOfSystem, 5.0, 7.1, 1.3},
        {2, 1.2, std::nullopt, 64, K::AltSymbol1D, 7.5, 8.7, 29.2},
        {2, 1.2, std::nullopt, 128, K::Deriv1, 8.0, 25.2, 1.3},
        {2, 1.2, std::nullopt, 128, K::Deriv2, 10.0, 26.8, 2.2},
        {2, 1.2, std::nullopt, 128, K::TridiagOfSystem, 5.0, 23.1, 1.4},
        {2, 1.2, std::nullopt, 128, K::AltSymbol1D, 8.5, 33.4, 58.7},
        {2, 1.2, std::nullopt, 256, K::Deriv1, 7.0, 111.6, 1.3},
        {2, 1.2, std::nullopt, 256, K::Deriv2, 10.0, 121.9, 2.4},
        {2, 1.2, std::nullopt, 256, K::TridiagOfSystem, 5.0, 108.9, 1.5},
        {2, 1.2, std::nullopt, 256, K::AltSymbol1D, 9.9, 151.3, 118.6},
        {2, 1.2, std::nullopt, 512, K::Deriv1, 7.0, 475.2, 1.4},
        {2, 1.2, std::nullopt, 512, K::Deriv2, 10.0, 532.5, 2.6},
        {2, 1.2, std::nullopt, 512, K::TridiagOfSystem, 5.0, 463.8, 1.5},
        {2, 1.2, std::nullopt, 512, K::AltSymbol1D, 9.9, 623.5, 239.7},
        {2, 1.5, std::nullopt, 64, K::Deriv1, 16.0, 8.5, 2.5},
        {2, 1.5, std::nullopt, 64, K::Deriv2, 8.0, 7.6, 2.1},
        {2, 1.5, std::nullopt, 64, K::TridiagOfSystem, 7.0, 7.5, 2.4},
        {2, 1.5, std::nullopt, 64, K::AltSymbol1D, 8.7, 9.1, 13.6},
        {2, 1.5, std::nullopt, 128, K::Deriv1, 20.0, 36.5, 3.1},
        {2, 1.5, std::nullopt, 128, K::Deriv2, 9.0, 26.3, 2.3},
        {2, 1.5, std::nullopt, 128, K::TridiagOfSystem, 8.0, 25.6, 3.0},
        {2, 1.5, std::nullopt, 128, K::AltSymbol1D, 8.0, 33.7, 26.3},
        {2, 1.5, std::nullopt, 256, K::Deriv1, 24.0, 181.5, 4.0},
        {2, 1.5, std::nullopt, 256, K::Deriv2, 9.0, 119.2, 2.7},
        {2, 1.5, std::nullopt, 256, K::TridiagOfSystem, 11.0, 125.8, 4.0},
        {2, 1.5, std::nullopt, 256, K::AltSymbol1D, 8.4, 142.3, 51.8},
        {2, 1.5, std::nullopt, 512, K::Deriv1, 26.0, 742.4, 5.2},
        {2, 1.5, std::nullopt, 512, K::Deriv2, 10.0, 528.5, 3.0},
        {2, 1.5, std::nullopt, 512, K::TridiagOfSystem, 13.0, 563.8, 5.4},
        {2, 1.5, std::nullopt, 512, K::AltSymbol1D, 9.9, 615.2, 103.0},
        {2, 1.8, std::nullopt, 64, K::Deriv1, 25.0, 9.7, 8.4},
        {2, 1.8, std::nullopt, 64, K::Deriv2, 6.0, 7.2, 1.6},
        {2, 1.8, std::nullopt, 64, K::TridiagOfSystem, 7.0, 7.3, 3.5},
        {2, 1.8, std::nullopt, 64, K::AltSymbol1D, 8.0, 8.7, 9.0},
        {2, 1.8, std::nullopt, 128, K::Deriv1, 40.0, 57.6, 14.3},
        {2, 1.8, std::nullopt, 128, K::Deriv2, 6.0, 23.5, 1.7},
        {2, 1.8, std::nullopt, 128, K::TridiagOfSystem, 10.0, 28.0, 5.6},
        {2, 1.8, std::nullopt, 128, K::AltSymbol1D, 7.8, 32.1, 17.0},
        {2, 1.8, std::nullopt, 256, K::Deriv1, 61.0, 348.2, 25.3},
        {2, 1.8, std::nullopt, 256, K::Deriv2, 7.0, 112.7, 1.8},
        {2, 1.8, std::nullopt, 256, K::TridiagOfSystem, 15.0, 143.4, 9.4},
        {2, 1.8, std::nullopt, 256, K::AltSymbol1D, 6.9, 133.6, 33.1},
        {2, 1.8, std::nullopt, 512, K::Deriv1, 88.0, 1943.0, 44.7},
        {2, 1.8, std::nullopt, 512, K::Deriv2, 7.0, 489.2, 2.0},
        {2, 1.8, std::nullopt, 512, K::TridiagOfSystem, 22.0, 698.3, 16.6},
        {2, 1.8, std::nullopt, 512, K::AltSymbol1D, 7.0, 560.1, 65.4},
        {3, 1.8, 1.6, 16, K::Identity, 37.0, 50.8, 57.4},
        {3, 1.8, 1.6, 16, K::SymbolTau2D, 8.0, 51.6, 1.9},
        {3, 1.8, 1.6, 32, K::Identity, 73.0, 715.6, 167.4},
        {3, 1.8, 1.6, 32, K::SymbolTau2D, 8.0, 571.3, 2.7},
        {3, 1.8, 1.6, 64, K::Identity, 137.0, 35305.0, 429.4},
        {3, 1.8, 1.6, 64, K::SymbolTau2D, 9.0, 16500.0, 4.3},
        {3, 1.8, 1.6, 128, K::Identity, 251.0, 1526624.0, 966.8},
        {3, 1.8, 1.6, 128, K::SymbolTau2D, 9.0, 388455.0, 7.7},
        {4, 1.8, 1.2, 16, K::Identity, 49.0, 56.5, 57.8},
        {4, 1.8, 1.2, 16, K::SymbolTau2D, 10.0, 54.5, 1.9},
        {4, 1.8, 1.2, 32, K::Identity, 92.0, 896.9, 162.9},
        {4, 1.8, 1.2, 32, K::SymbolTau2D, 12.0, 592.0, 2.7},
        {4, 1.8, 1.2, 64, K::Identity, 173.0, 43825.0, 401.7},
        {4, 1.8, 1.2, 64, K::SymbolTau2D, 13.0, 16872.0, 4.4},
        {4, 1.8, 1.2, 128, K::Identity, 316.0, 1811828.0, 876.4},
        {4, 1.8, 1.2, 128, K::SymbolTau2D, 14.5, 419146.0, 7.9},
    };
    return cells;
}

}  // namespace fde
