#include "dqm/reference_tables.hpp"

#include "dqm/errors.hpp"

namespace dqm {

namespace {

// {table, n, alpha, param1, param2, B, phi, S_r, S_p, S_r + S_p}

const std::vector<ReferenceRow> kTable1 = {
    {1, 0, 0.75, 1, 0, 1, 0.75, 0.39417, 2.18524, 2.57941},
    {1, 0, 0.75, 2, 0, 1, 0.75, 0.21107, 2.62431, 2.83539},
    {1, 0, 0.75, 3, 0, 1, 0.75, 0.05520, 3.06695, 3.12216},
    {1, 0, 0.75, 1, 0, 1, 0.75, 0.39417, 2.18524, 2.57941},
    {1, 0, 0.75, 1, 0, 2, 0.75, 0.12627, 2.85657, 2.98284},
    {1, 0, 0.75, 1, 0, 3, 0.75, -0.05872, 3.43706, 3.37834},
    {1, 0, 0.75, 1, 0, 1, 0.75, 0.39417, 2.18524, 2.57941},
    {1, 0, 0.50, 1, 0, 1, 0.75, 0.27031, 2.30919, 2.57952},
    {1, 0, 0.25, 1, 0, 1, 0.75, -0.00994, 2.88589, 2.87595},
    {1, 0, 0.75, 1, 0, 1, 0.75, 0.39417, 2.18524, 2.57941},
    {1, 0, 0.75, 1, 0, 1, 0.50, 0.36449, 2.60346, 2.96796},
    {1, 0, 0.75, 1, 0, 1, 0.25, 0.30282, 3.52935, 3.83218},
    {1, 1, 0.75, 1, 0, 1, 0.75, 0.58994, 2.49844, 3.08840},
    {1, 1, 0.75, 2, 0, 1, 0.75, 0.40685, 2.97947, 3.38634},
    {1, 1, 0.75, 3, 0, 1, 0.75, 0.25099, 3.97897, 4.22996},
    {1, 1, 0.75, 1, 0, 1, 0.75, 0.58994, 2.49844, 3.08840},
    {1, 1, 0.75, 1, 0, 2, 0.75, 0.32205, 3.70456, 4.02662},
    {1, 1, 0.75, 1, 0, 3, 0.75, 0.13705, 4.46182, 4.59889},
    {1, 1, 0.75, 1, 0, 1, 0.75, 0.58994, 2.49844, 3.08840},
    {1, 1, 0.50, 1, 0, 1, 0.75, 0.48168, 2.92872, 3.41041},
    {1, 1, 0.25, 1, 0, 1, 0.75, 0.22427, 3.64496, 3.86924},
    {1, 1, 0.75, 1, 0, 1, 0.75, 0.58994, 2.49844, 3.08840},
    {1, 1, 0.75, 1, 0, 1, 0.50, 0.54448, 3.45037, 3.99486},
    {1, 1, 0.75, 1, 0, 1, 0.25, 0.45891, 5.56064, 6.01957},
    {1, 2, 0.75, 1, 0, 1, 0.75, 0.69123, 3.32245, 4.01369},
    {1, 2, 0.75, 2, 0, 1, 0.75, 0.50814, 3.97297, 4.48112},
    {1, 2, 0.75, 3, 0, 1, 0.75, 0.35227, 4.64723, 4.99951},
    {1, 2, 0.75, 1, 0, 1, 0.75, 0.69123, 3.32245, 4.01369},
    {1, 2, 0.75, 1, 0, 2, 0.75, 0.42333, 4.32679, 4.75013},
    {1, 2, 0.75, 1, 0, 3, 0.75, 0.23834, 5.23984, 5.47819},
    {1, 2, 0.75, 1, 0, 1, 0.75, 0.69123, 3.32245, 4.01369},
    {1, 2, 0.50, 1, 0, 1, 0.75, 0.59233, 3.68546, 4.27781},
    {1, 2, 0.25, 1, 0, 1, 0.75, 0.35013, 4.13503, 4.48517},
    {1, 2, 0.75, 1, 0, 1, 0.75, 0.69123, 3.32245, 4.01369},
    {1, 2, 0.75, 1, 0, 1, 0.50, 0.63687, 4.03671, 4.67359},
    {1, 2, 0.75, 1, 0, 1, 0.25, 0.53865, 6.50506, 7.04372},
};

const std::vector<ReferenceRow> kTable2 = {
    {2, 0, 0.75, 1, 1, 1, 0.75, 0.34703, 2.11158, 2.45862},
    {2, 0, 0.75, 2, 1, 1, 0.75, 0.49255, 1.73543, 2.22799},
    {2, 0, 0.75, 3, 1, 1, 0.75, 0.53350, 1.69360, 2.22710},
    {2, 0, 0.75, 1, 1, 1, 0.75, 0.34703, 2.11158, 2.45862},
    {2, 0, 0.75, 1, 2, 1, 0.75, 0.25081, 2.32543, 2.57625},
    {2, 0, 0.75, 1, 3, 1, 0.75, 0.18197, 2.42326, 2.60523},
    {2, 0, 0.75, 1, 1, 1, 0.75, 0.34703, 2.11158, 2.45862},
    {2, 0, 0.75, 1, 1, 2, 0.75, 0.12694, 2.63157, 2.75852},
    {2, 0, 0.75, 1, 1, 3, 0.75, -0.04327, 3.11973, 3.07646},
    {2, 0, 0.75, 1, 1, 1, 0.75, 0.34703, 2.11158, 2.45862},
    {2, 0, 0.50, 1, 1, 1, 0.75, 0.23843, 2.30804, 2.54648},
    {2, 0, 0.25, 1, 1, 1, 0.75, -0.02167, 2.96743, 2.94576},
    {2, 0, 0.75, 1, 1, 1, 0.75, 0.34703, 2.11158, 2.45862},
    {2, 0, 0.75, 1, 1, 1, 0.50, 0.34238, 2.13971, 2.48209},
    {2, 0, 0.75, 1, 1, 1, 0.25, 0.33881, 2.16386, 2.50268},
    {2, 1, 0.75, 1, 1, 1, 0.75, 0.56364, 2.68028, 3.24393},
    {2, 1, 0.75, 2, 1, 1, 0.75, 0.72677, 2.19688, 2.92366},
    {2, 1, 0.75, 3, 1, 1, 0.75, 0.77714, 2.07871, 2.85585},
    {2, 1, 0.75, 1, 1, 1, 0.75, 0.56364, 2.68028, 3.24393},
    {2, 1, 0.75, 1, 2, 1, 0.75, 0.47613, 2.85589, 3.33204},
    {2, 1, 0.75, 1, 3, 1, 0.75, 0.41254, 3.02634, 3.43889},
    {2, 1, 0.75, 1, 1, 1, 0.75, 0.56364, 2.68028, 3.24393},
    {2, 1, 0.75, 1, 1, 2, 0.75, 0.34355, 3.31826, 3.66182},
    {2, 1, 0.75, 1, 1, 3, 0.75, 0.17333, 3.93621, 4.10956},
    {2, 1, 0.75, 1, 1, 1, 0.75, 0.56364, 2.68028, 3.24393},
    {2, 1, 0.50, 1, 1, 1, 0.75, 0.46107, 2.91164, 3.37272},
    {2, 1, 0.25, 1, 1, 1, 0.75, 0.21528, 3.67230, 3.88758},
    {2, 1, 0.75, 1, 1, 1, 0.75, 0.56364, 2.68028, 3.24393},
    {2, 1, 0.75, 1, 1, 1, 0.50, 0.55528, 2.72988, 3.28517},
    {2, 1, 0.75, 1, 1, 1, 0.25, 0.54899, 2.77108, 3.32009},
    {2, 2, 0.75, 1, 1, 1, 0.75, 0.67760, 3.08203, 3.75964},
    {2, 2, 0.75, 2, 1, 1, 0.75, 0.85263, 2.49365, 3.34629},
    {2, 2, 0.75, 3, 1, 1, 0.75, 0.90996, 2.33945, 3.24942},
    {2, 2, 0.75, 1, 1, 1, 0.75, 0.67760, 3.08203, 3.75964},
    {2, 2, 0.75, 1, 2, 1, 0.75, 0.59582, 3.22958, 3.82540},
    {2, 2, 0.75, 1, 3, 1, 0.75, 0.53582, 3.44160, 3.97743},
    {2, 2, 0.75, 1, 1, 1, 0.75, 0.67760, 3.08203, 3.75964},
    {2, 2, 0.75, 1, 1, 2, 0.75, 0.45752, 3.81845, 4.27597},
    {2, 2, 0.75, 1, 1, 3, 0.75, 0.28730, 4.53177, 4.81907},
    {2, 2, 0.75, 1, 1, 1, 0.75, 0.67761, 3.08203, 3.75964},
    {2, 2, 0.50, 1, 1, 1, 0.75, 0.57897, 3.30096, 3.87993},
    {2, 2, 0.25, 1, 1, 1, 0.75, 0.34313, 4.15724, 4.50037},
    {2, 2, 0.75, 1, 1, 1, 0.75, 0.67761, 3.08203, 3.75964},
    {2, 2, 0.75, 1, 1, 1, 0.50, 0.66690, 3.14788, 3.81478},
    {2, 2, 0.75, 1, 1, 1, 0.25, 0.65892, 3.17998, 3.83890},
};

const std::vector<ReferenceRow> kTable3 = {
    {3, 0, 0.75, 1, 0, 1, 0.75, 0.53548, 1.74891, 2.28441},
    {3, 0, 0.75, 2, 0, 1, 0.75, 0.54548, 1.72255, 2.26804},
    {3, 0, 0.75, 3, 0, 1, 0.75, 0.55094, 1.67033, 2.22128},
    {3, 0, 0.75, 1, 0, 1, 0.75, 0.53548, 1.74891, 2.28441},
    {3, 0, 0.75, 1, 0, 2, 0.75, 0.18890, 2.47334, 2.66225},
    {3, 0, 0.75, 1, 0, 3, 0.75, -0.01382, 3.02921, 3.01539},
    {3, 0, 0.75, 1, 0, 1, 0.75, 0.53548, 1.74891, 2.28441},
    {3, 0, 0.50, 1, 0, 1, 0.75, 0.33980, 2.08185, 2.42166},
    {3, 0, 0.25, 1, 0, 1, 0.75, 0.00777, 2.88067, 2.88845},
    {3, 0, 0.75, 1, 0, 1, 0.75, 0.53548, 1.74891, 2.28441},
    {3, 0, 0.75, 1, 0, 1, 0.50, 0.53082, 1.77221, 2.30304},
    {3, 0, 0.75, 1, 0, 1, 0.25, 0.52725, 1.79221, 2.31948},
    {3, 1, 0.75, 1, 0, 1, 0.75, 0.75208, 2.19577, 2.94787},
    {3, 1, 0.75, 2, 0, 1, 0.75, 0.77080, 2.11909, 2.88989},
    {3, 1, 0.75, 3, 0, 1, 0.75, 0.78151, 2.08346, 2.86498},
    {3, 1, 0.75, 1, 0, 1, 0.75, 0.75208, 2.19577, 2.94787},
    {3, 1, 0.75, 1, 0, 2, 0.75, 0.40551, 3.11764, 3.52316},
    {3, 1, 0.75, 1, 0, 3, 0.75, 0.20278, 3.82305, 4.02584},
    {3, 1, 0.75, 1, 0, 1, 0.75, 0.75208, 2.19577, 2.94787},
    {3, 1, 0.50, 1, 0, 1, 0.75, 0.56244, 2.62861, 3.19105},
    {3, 1, 0.25, 1, 0, 1, 0.75, 0.24473, 3.56620, 3.81094},
    {3, 1, 0.75, 1, 0, 1, 0.75, 0.75208, 2.19577, 2.94787},
    {3, 1, 0.75, 1, 0, 1, 0.50, 0.74373, 2.26101, 3.00475},
    {3, 1, 0.75, 1, 0, 1, 0.25, 0.73744, 2.29512, 3.03257},
    {3, 2, 0.75, 1, 0, 1, 0.75, 0.86604, 2.55266, 3.41871},
    {3, 2, 0.75, 2, 0, 1, 0.75, 0.89048, 2.42533, 3.31582},
    {3, 2, 0.75, 3, 0, 1, 0.75, 0.90480, 2.37398, 3.27879},
    {3, 2, 0.75, 1, 0, 1, 0.75, 0.86604, 2.55266, 3.41871},
    {3, 2, 0.75, 1, 0, 2, 0.75, 0.51947, 3.58578, 4.27597},
    {3, 2, 0.75, 1, 0, 3, 0.75, 0.31674, 4.39959, 4.71634},
    {3, 2, 0.75, 1, 0, 1, 0.75, 0.86604, 2.55266, 3.41871},
    {3, 2, 0.50, 1, 0, 1, 0.75, 0.68033, 3.01140, 3.69173},
    {3, 2, 0.25, 1, 0, 1, 0.75, 0.37257, 4.03574, 4.40832},
    {3, 2, 0.75, 1, 0, 1, 0.75, 0.86604, 2.55266, 3.41871},
    {3, 2, 0.75, 1, 0, 1, 0.50, 0.85533, 2.60722, 3.46256},
    {3, 2, 0.75, 1, 0, 1, 0.25, 0.84735, 2.65187, 3.49923},
};

}  // namespace

const std::vector<ReferenceRow>& reference_table(int which) {
    switch (which) {
        case 1: return kTable1;
        case 2: return kTable2;
        case 3: return kTable3;
        default: throw DomainError("reference_table: which must be 1, 2 or 3");
    }
}

}  // namespace dqm
