// Generated by scripts/gen_tw1_table.py -- do not edit.
#include "sbmtest/tw1.hpp"

namespace sbmtest::detail {

const char* const kTw1TableVersion = "tw1-b1-v1";
const double kTw1Mean = -1.206533574710;
const double kTw1Sd = 1.267983056623;
const char* const kTw1ChecksumHex = "79e31e184e089564";
const std::size_t kTw1GridSize = 911;

const double kTw1GridX[] = {
    -10.000000, -9.980000, -9.960000, -9.940000, -9.920000, -9.900000,
    -9.880000, -9.860000, -9.840000, -9.820000, -9.800000, -9.780000,
    -9.760000, -9.740000, -9.720000, -9.700000, -9.680000, -9.660000,
    -9.640000, -9.620000, -9.600000, -9.580000, -9.560000, -9.540000,
    -9.520000, -9.500000, -9.480000, -9.460000, -9.440000, -9.420000,
    -9.400000, -9.380000, -9.360000, -9.340000, -9.320000, -9.300000,
    -9.280000, -9.260000, -9.240000, -9.220000, -9.200000, -9.180000,
    -9.160000, -9.140000, -9.120000, -9.100000, -9.080000, -9.060000,
    -9.040000, -9.020000, -9.000000, -8.980000, -8.960000, -8.940000,
    -8.920000, -8.900000, -8.880000, -8.860000, -8.840000, -8.820000,
    -8.800000, -8.780000, -8.760000, -8.740000, -8.720000, -8.700000,
    -8.680000, -8.660000, -8.640000, -8.620000, -8.600000, -8.580000,
    -8.560000, -8.540000, -8.520000, -8.500000, -8.480000, -8.460000,
    -8.440000, -8.420000, -8.400000, -8.380000, -8.360000, -8.340000,
    -8.320000, -8.300000, -8.280000, -8.260000, -8.240000, -8.220000,
    -8.200000, -8.180000, -8.160000, -8.140000, -8.120000, -8.100000,
    -8.080000, -8.060000, -8.040000, -8.020000, -8.000000, -7.980000,
    -7.960000, -7.940000, -7.920000, -7.900000, -7.880000, -7.860000,
    -7.840000, -7.820000, -7.800000, -7.780000, -7.760000, -7.740000,
    -7.720000, -7.700000, -7.680000, -7.660000, -7.640000, -7.620000,
    -7.600000, -7.580000, -7.560000, -7.540000, -7.520000, -7.500000,
    -7.480000, -7.460000, -7.440000, -7.420000, -7.400000, -7.380000,
    -7.360000, -7.340000, -7.320000, -7.300000, -7.280000, -7.260000,
    -7.240000, -7.220000, -7.200000, -7.180000, -7.160000, -7.140000,
    -7.120000, -7.100000, -7.080000, -7.060000, -7.040000, -7.020000,
    -7.000000, -6.980000, -6.960000, -6.940000, -6.920000, -6.900000,
    -6.880000, -6.860000, -6.840000, -6.820000, -6.800000, -6.780000,
    -6.760000, -6.740000, -6.720000, -6.700000, -6.680000, -6.660000,
    -6.640000, -6.620000, -6.600000, -6.580000, -6.560000, -6.540000,
    -6.520000, -6.500000, -6.480000, -6.460000, -6.440000, -6.420000,
    -6.400000, -6.380000, -6.360000, -6.340000, -6.320000, -6.300000,
    -6.280000, -6.260000, -6.240000, -6.220000, -6.200000, -6.180000,
    -6.160000, -6.140000, -6.120000, -6.100000, -6.080000, -6.060000,
    -6.040000, -6.020000, -6.000000, -5.980000, -5.960000, -5.940000,
    -5.920000, -5.900000, -5.880000, -5.860000, -5.840000, -5.820000,
    -5.800000, -5.780000, -5.760000, -5.740000, -5.720000, -5.700000,
    -5.680000, -5.660000, -5.640000, -5.620000, -5.600000, -5.580000,
    -5.560000, -5.540000, -5.520000, -5.500000, -5.480000, -5.460000,
    -5.440000, -5.420000, -5.400000, -5.380000, -5.360000, -5.340000,
    -5.320000, -5.300000, -5.280000, -5.260000, -5.240000, -5.220000,
    -5.200000, -5.180000, -5.160000, -5.140000, -5.120000, -5.100000,
    -5.080000, -5.060000, -5.040000, -5.020000, -5.000000, -4.980000,
    -4.960000, -4.940000, -4.920000, -4.900000, -4.880000, -4.860000,
    -4.840000, -4.820000, -4.800000, -4.780000, -4.760000, -4.740000,
    -4.720000, -4.700000, -4.680000, -4.660000, -4.640000, -4.620000,
    -4.600000, -4.580000, -4.560000, -4.540000, -4.520000, -4.500000,
    -4.480000, -4.460000, -4.440000, -4.420000, -4.400000, -4.380000,
    -4.360000, -4.340000, -4.320000, -4.300000, -4.280000, -4.260000,
    -4.240000, -4.220000, -4.200000, -4.180000, -4.160000, -4.140000,
    -4.120000, -4.100000, -4.080000, -4.060000, -4.040000, -4.020000,
    -4.000000, -3.980000, -3.960000, -3.940000, -3.920000, -3.900000,
    -3.880000, -3.860000, -3.840000, -3.820000, -3.800000, -3.780000,
    -3.760000, -3.740000, -3.720000, -3.700000, -3.680000, -3.660000,
    -3.640000, -3.620000, -3.600000, -3.580000, -3.560000, -3.540000,
    -3.520000, -3.500000, -3.480000, -3.460000, -3.440000, -3.420000,
    -3.400000, -3.380000, -3.360000, -3.340000, -3.320000, -3.300000,
    -3.280000, -3.260000, -3.240000, -3.220000, -3.200000, -3.180000,
    -3.160000, -3.140000, -3.120000, -3.100000, -3.080000, -3.060000,
    -3.040000, -3.020000, -3.000000, -2.980000, -2.960000, -2.940000,
    -2.920000, -2.900000, -2.880000, -2.860000, -2.840000, -2.820000,
    -2.800000, -2.780000, -2.760000, -2.740000, -2.720000, -2.700000,
    -2.680000, -2.660000, -2.640000, -2.620000, -2.600000, -2.580000,
    -2.560000, -2.540000, -2.520000, -2.500000, -2.480000, -2.460000,
    -2.440000, -2.420000, -2.400000, -2.380000, -2.360000, -2.340000,
    -2.320000, -2.300000, -2.280000, -2.260000, -2.240000, -2.220000,
    -2.200000, -2.180000, -2.160000, -2.140000, -2.120000, -2.100000,
    -2.080000, -2.060000, -2.040000, -2.020000, -2.000000, -1.980000,
    -1.960000, -1.940000, -1.920000, -1.900000, -1.880000, -1.860000,
    -1.840000, -1.820000, -1.800000, -1.780000, -1.760000, -1.740000,
    -1.720000, -1.700000, -1.680000, -1.660000, -1.640000, -1.620000,
    -1.600000, -1.580000, -1.560000, -1.540000, -1.520000, -1.500000,
    -1.480000, -1.460000, -1.440000, -1.420000, -1.400000, -1.380000,
    -1.360000, -1.340000, -1.320000, -1.300000, -1.280000, -1.260000,
    -1.240000, -1.220000, -1.200000, -1.180000, -1.160000, -1.140000,
    -1.120000, -1.100000, -1.080000, -1.060000, -1.040000, -1.020000,
    -1.000000, -0.980000, -0.960000, -0.940000, -0.920000, -0.900000,
    -0.880000, -0.860000, -0.840000, -0.820000, -0.800000, -0.780000,
    -0.760000, -0.740000, -0.720000, -0.700000, -0.680000, -0.660000,
    -0.640000, -0.620000, -0.600000, -0.580000, -0.560000, -0.540000,
    -0.520000, -0.500000, -0.480000, -0.460000, -0.440000, -0.420000,
    -0.400000, -0.380000, -0.360000, -0.340000, -0.320000, -0.300000,
    -0.280000, -0.260000, -0.240000, -0.220000, -0.200000, -0.180000,
    -0.160000, -0.140000, -0.120000, -0.100000, -0.080000, -0.060000,
    -0.040000, -0.020000, 0.000000, 0.020000, 0.040000, 0.060000,
    0.080000, 0.100000, 0.120000, 0.140000, 0.160000, 0.180000,
    0.200000, 0.220000, 0.240000, 0.260000, 0.280000, 0.300000,
    0.320000, 0.340000, 0.360000, 0.380000, 0.400000, 0.420000,
    0.440000, 0.460000, 0.480000, 0.500000, 0.520000, 0.540000,
    0.560000, 0.580000, 0.600000, 0.620000, 0.640000, 0.660000,
    0.680000, 0.700000, 0.720000, 0.740000, 0.760000, 0.780000,
    0.800000, 0.820000, 0.840000, 0.860000, 0.880000, 0.900000,
    0.920000, 0.940000, 0.960000, 0.980000, 1.000000, 1.020000,
    1.040000, 1.060000, 1.080000, 1.100000, 1.120000, 1.140000,
    1.160000, 1.180000, 1.200000, 1.220000, 1.240000, 1.260000,
    1.280000, 1.300000, 1.320000, 1.340000, 1.360000, 1.380000,
    1.400000, 1.420000, 1.440000, 1.460000, 1.480000, 1.500000,
    1.520000, 1.540000, 1.560000, 1.580000, 1.600000, 1.620000,
    1.640000, 1.660000, 1.680000, 1.700000, 1.720000, 1.740000,
    1.760000, 1.780000, 1.800000, 1.820000, 1.840000, 1.860000,
    1.880000, 1.900000, 1.920000, 1.940000, 1.960000, 1.980000,
    2.000000, 2.020000, 2.040000, 2.060000, 2.080000, 2.100000,
    2.120000, 2.140000, 2.160000, 2.180000, 2.200000, 2.220000,
    2.240000, 2.260000, 2.280000, 2.300000, 2.320000, 2.340000,
    2.360000, 2.380000, 2.400000, 2.420000, 2.440000, 2.460000,
    2.480000, 2.500000, 2.520000, 2.540000, 2.560000, 2.580000,
    2.600000, 2.620000, 2.640000, 2.660000, 2.680000, 2.700000,
    2.720000, 2.740000, 2.760000, 2.780000, 2.800000, 2.820000,
    2.840000, 2.860000, 2.880000, 2.900000, 2.920000, 2.940000,
    2.960000, 2.980000, 3.000000, 3.020000, 3.040000, 3.060000,
    3.080000, 3.100000, 3.120000, 3.140000, 3.160000, 3.180000,
    3.200000, 3.220000, 3.240000, 3.260000, 3.280000, 3.300000,
    3.320000, 3.340000, 3.360000, 3.380000, 3.400000, 3.420000,
    3.440000, 3.460000, 3.480000, 3.500000, 3.520000, 3.540000,
    3.560000, 3.580000, 3.600000, 3.620000, 3.640000, 3.660000,
    3.680000, 3.700000, 3.720000, 3.740000, 3.760000, 3.780000,
    3.800000, 3.820000, 3.840000, 3.860000, 3.880000, 3.900000,
    3.920000, 3.940000, 3.960000, 3.980000, 4.000000, 4.020000,
    4.040000, 4.060000, 4.080000, 4.100000, 4.120000, 4.140000,
    4.160000, 4.180000, 4.200000, 4.220000, 4.240000, 4.260000,
    4.280000, 4.300000, 4.320000, 4.340000, 4.360000, 4.380000,
    4.400000, 4.420000, 4.440000, 4.460000, 4.480000, 4.500000,
    4.520000, 4.540000, 4.560000, 4.580000, 4.600000, 4.620000,
    4.640000, 4.660000, 4.680000, 4.700000, 4.720000, 4.740000,
    4.760000, 4.780000, 4.800000, 4.820000, 4.840000, 4.860000,
    4.880000, 4.900000, 4.920000, 4.940000, 4.960000, 4.980000,
    5.000000, 5.020000, 5.040000, 5.060000, 5.080000, 5.100000,
    5.120000, 5.140000, 5.160000, 5.180000, 5.200000, 5.220000,
    5.240000, 5.260000, 5.280000, 5.300000, 5.320000, 5.340000,
    5.360000, 5.380000, 5.400000, 5.420000, 5.440000, 5.460000,
    5.480000, 5.500000, 5.520000, 5.540000, 5.560000, 5.580000,
    5.600000, 5.620000, 5.640000, 5.660000, 5.680000, 5.700000,
    5.720000, 5.740000, 5.760000, 5.780000, 5.800000, 5.820000,
    5.840000, 5.860000, 5.880000, 5.900000, 5.920000, 5.940000,
    5.960000, 5.980000, 6.000000, 6.020000, 6.040000, 6.060000,
    6.080000, 6.100000, 6.120000, 6.140000, 6.160000, 6.180000,
    6.200000, 6.220000, 6.240000, 6.260000, 6.280000, 6.300000,
    6.320000, 6.340000, 6.360000, 6.380000, 6.400000, 6.420000,
    6.440000, 6.460000, 6.480000, 6.500000, 6.520000, 6.540000,
    6.560000, 6.580000, 6.600000, 6.620000, 6.640000, 6.660000,
    6.680000, 6.700000, 6.720000, 6.740000, 6.760000, 6.780000,
    6.800000, 6.820000, 6.840000, 6.860000, 6.880000, 6.900000,
    6.920000, 6.940000, 6.960000, 6.980000, 7.000000, 7.020000,
    7.040000, 7.060000, 7.080000, 7.100000, 7.120000, 7.140000,
    7.160000, 7.180000, 7.200000, 7.220000, 7.240000, 7.260000,
    7.280000, 7.300000, 7.320000, 7.340000, 7.360000, 7.380000,
    7.400000, 7.420000, 7.440000, 7.460000, 7.480000, 7.500000,
    7.520000, 7.540000, 7.560000, 7.580000, 7.600000, 7.620000,
    7.640000, 7.660000, 7.680000, 7.700000, 7.720000, 7.740000,
    7.760000, 7.780000, 7.800000, 7.820000, 7.840000, 7.860000,
    7.880000, 7.900000, 7.920000, 7.940000, 7.960000, 7.980000,
    8.000000, 8.020000, 8.040000, 8.060000, 8.080000, 8.100000,
    8.120000, 8.140000, 8.160000, 8.180000, 8.200000,
};

const double kTw1GridCdf[] = {
    3.15490236914898e-22, 4.14148411247114e-22, 5.43091958008153e-22, 7.11437514883608e-22,
    9.31058787442088e-22, 1.21718037765988e-21, 1.58960477366963e-21, 2.07391977676427e-21,
    2.70300485672168e-21, 3.51936743778396e-21, 4.57768485556586e-21, 5.94831643531559e-21,
    7.72139494873921e-21, 1.00132506420510e-20, 1.29721054979434e-20, 1.67888037457808e-20,
    2.17067820757999e-20, 2.80371170640537e-20, 3.61780163897635e-20, 4.66367554937488e-20,
    6.00596857993484e-20, 7.72691242843304e-20, 9.93133880044250e-20, 1.27521204289118e-19,
    1.63580746922267e-19, 2.09631971272744e-19, 2.68386410980259e-19, 3.43273561464525e-19,
    4.38633669127381e-19, 5.59938588551777e-19, 7.14102642581146e-19, 9.09834919819955e-19,
    1.15810029662433e-18, 1.47269842414257e-18, 1.87096619593432e-18, 2.37466604785787e-18,
    3.01110277907703e-18, 3.81447451404079e-18, 4.82760916022965e-18, 6.10405467487326e-18,
    7.71068392261351e-18, 9.73103606222233e-18, 1.22691879467919e-17, 1.54548466837361e-17,
    1.94494078915136e-17, 2.44535717352029e-17, 3.07165339023099e-17, 3.85476543793926e-17,
    4.83303806102580e-17, 6.05395896332357e-17, 7.57629836374397e-17, 9.47269432814172e-17,
    1.18328634212435e-16, 1.47674961258493e-16, 1.84130334028469e-16, 2.29375066152965e-16,
    2.85476728122409e-16, 3.54976019553859e-16, 4.40993770614200e-16, 5.47358284930050e-16,
    6.78762228290791e-16, 8.40951855027437e-16, 1.04095786482631e-15, 1.28737323364110e-15,
    1.59069129627028e-15, 1.96371452758312e-15, 2.42204776822053e-15, 2.98469392927367e-15,
    3.67477205867138e-15, 4.52038582295713e-15, 5.55566251315259e-15, 6.82201116122040e-15,
    8.36962536913936e-15, 1.02592940886537e-14, 1.25645715145378e-14, 1.53743740996920e-14,
    1.87960979284272e-14, 2.29593328064968e-14, 2.80203131571207e-14, 3.41672242958100e-14,
    4.16265392372662e-14, 5.06705567676304e-14, 6.16263739481384e-14, 7.48865832392619e-14,
    9.09219461866709e-14, 1.10296463841321e-13, 1.33685243832536e-13, 1.61895675904177e-13,
    1.95892471895967e-13, 2.36827335460575e-13, 2.86073982594385e-13, 3.45269494629087e-13,
    4.16363078424150e-13, 5.01673573181429e-13, 6.03957131534155e-13, 7.26486808647144e-13,
    8.73146123485990e-13, 1.04853894458137e-12, 1.25811835386227e-12, 1.50833770597001e-12,
    1.80682747636300e-12, 2.16260224196187e-12, 2.58630255976230e-12, 3.09047750121619e-12,
    3.68991424424550e-12, 4.40202240276959e-12, 5.24728150289618e-12, 6.24976199493144e-12,
    7.43773062734590e-12, 8.84435411869232e-12, 1.05085153952944e-11, 1.24757604409948e-11,
    1.47993950534013e-11, 1.75417545301717e-11, 2.07756721169106e-11, 2.45861753311477e-11,
    2.90724453678040e-11, 3.43500759055502e-11, 4.05536777736845e-11, 4.78398766439731e-11,
    5.63907631561587e-11, 6.64178577575323e-11, 7.81666644864875e-11, 9.19218967887677e-11,
    1.08013467419785e-10, 1.26823352142799e-10, 1.48793442502485e-10, 1.74434527832110e-10,
    2.04336555791639e-10, 2.39180346654254e-10, 2.79750952796714e-10, 3.26952884796423e-10,
    3.81827446260724e-10, 4.45572456049999e-10, 5.19564665798468e-10, 6.05385218312903e-10,
    7.04848537634114e-10, 8.20035085376022e-10, 9.53328462135426e-10, 1.10745740897483e-09,
    1.28554329788342e-09, 1.49115379998125e-09, 1.72836347492830e-09, 2.00182211755550e-09,
    2.31683178767971e-09, 2.67943356172267e-09, 3.09650514787831e-09, 3.57587061377417e-09,
    4.12642367472779e-09, 4.75826603698160e-09, 5.48286256773455e-09, 6.31321514716372e-09,
    7.26405731571285e-09, 8.35207201807543e-09, 9.59613496335752e-09, 1.10175864239863e-08,
    1.26405345078414e-08, 1.44921933135281e-08, 1.66032595951022e-08, 1.90083320666317e-08,
    2.17463777292942e-08, 2.48612500631456e-08, 2.84022644133739e-08, 3.24248363396965e-08,
    3.69911892351022e-08, 4.21711380666310e-08, 4.80429567802873e-08, 5.46943374099284e-08,
    6.22234498279421e-08, 7.07401116761363e-08, 8.03670788484281e-08, 9.12414678810751e-08,
    1.03516322336022e-07, 1.17362336445413e-07, 1.32969750206262e-07, 1.50550431266079e-07,
    1.70340160205748e-07, 1.92601136970895e-07, 2.17624727729584e-07, 2.45734472567667e-07,
    2.77289376417581e-07, 3.12687506579752e-07, 3.52369922595683e-07, 3.96824965380496e-07,
    4.46592934794583e-07, 5.02271186727235e-07, 5.64519682603491e-07, 6.34067026875428e-07,
    7.11717029749389e-07, 7.98355835298608e-07, 8.94959657126226e-07, 1.00260316689069e-06,
    1.12246858297547e-06, 1.25585551011903e-06, 1.40419158307255e-06, 1.56904397083048e-06,
    1.75213180077614e-06, 1.95533956540592e-06, 2.18073157752359e-06, 2.43056754315595e-06,
    2.70731932502769e-06, 3.01368897259780e-06, 3.35262809885032e-06, 3.72735868700041e-06,
    4.14139541451546e-06, 4.59856958544992e-06, 5.10305476558308e-06, 5.65939421921811e-06,
    6.27253024990057e-06, 6.94783555099860e-06, 7.69114667638822e-06, 8.50879974483665e-06,
    9.40766849537408e-06, 1.03952048146273e-05, 1.14794818606516e-05, 1.26692399112614e-05,
    1.39739350675678e-05, 1.54037909475516e-05, 1.69698535061640e-05, 1.86840491222610e-05,
    2.05592460941584e-05, 2.26093196884970e-05, 2.48492208887318e-05, 2.72950489903871e-05,
    2.99641281934336e-05, 3.28750883395940e-05, 3.60479499463029e-05, 3.95042136865904e-05,
    4.32669544641454e-05, 4.73609202320395e-05, 5.18126357015319e-05, 5.66505110850995e-05,
    6.19049560152745e-05, 6.76084987764647e-05, 7.37959109839148e-05, 8.05043378371860e-05,
    8.77734340720222e-05, 9.56455057257277e-05, 1.04165657824667e-04, 1.13381948094867e-04,
    1.23345546787103e-04, 1.34110902696311e-04, 1.45735915447729e-04, 1.58282114106568e-04,
    1.71814842157564e-04, 1.86403448885561e-04, 2.02121487175324e-04, 2.19046917730000e-04,
    2.37262319694291e-04, 2.56855107647530e-04, 2.77917754915861e-04, 3.00548023130095e-04,
    3.24849197937723e-04, 3.50930330754651e-04, 3.78906486418427e-04, 4.08898996584354e-04,
    4.41035718677974e-04, 4.75451300194803e-04, 5.12287448110509e-04, 5.51693203138648e-04,
    5.93825218546456e-04, 6.38848043208225e-04, 6.86934408551196e-04, 7.38265519015767e-04,
    7.93031345625383e-04, 8.51430922229043e-04, 9.13672643950410e-04, 9.79974567347926e-04,
    1.05056471175691e-03, 1.12568136125787e-03, 1.20557336668240e-03, 1.29050044703837e-03,
    1.38073348970710e-03, 1.47655484873601e-03, 1.57825864051987e-03, 1.68615103613788e-03,
    1.80055054958619e-03, 1.92178832111696e-03, 2.05020839487504e-03, 2.18616798999266e-03,
    2.33003776428724e-03, 2.48220206967985e-03, 2.64305919843771e-03, 2.81302161932216e-03,
    2.99251620271173e-03, 3.18198443375244e-03, 3.38188261257809e-03, 3.59268204063362e-03,
    3.81486919212607e-03, 4.04894586962465e-03, 4.29542934282903e-03, 4.55485246952474e-03,
    4.82776379774870e-03, 5.11472764819392e-03, 5.41632417589167e-03, 5.73314941022090e-03,
    6.06581527231109e-03, 6.41494956892248e-03, 6.78119596190806e-03, 7.16521391238822e-03,
    7.56767859879545e-03, 7.98928080797904e-03, 8.43072679859067e-03, 8.89273813601564e-03,
    9.37605149814681e-03, 9.88141845135130e-03, 1.04096051960185e-02, 1.09613922811341e-02,
    1.15375742873761e-02, 1.21389594782818e-02, 1.27663694190992e-02, 1.34206385629914e-02,
    1.41026138043321e-02, 1.48131539988920e-02, 1.55531294507886e-02, 1.63234213661386e-02,
    1.71249212734309e-02, 1.79585304107041e-02, 1.88251590796986e-02, 1.97257259672219e-02,
    2.06611574340514e-02, 2.16323867717742e-02, 2.26403534280480e-02, 2.36860022008431e-02,
    2.47702824023128e-02, 2.58941469930181e-02, 2.70585516873116e-02, 2.82644540307727e-02,
    2.95128124506611e-02, 3.08045852804367e-02, 3.21407297594727e-02, 3.35222010091668e-02,
    3.49499509867279e-02, 3.64249274179900e-02, 3.79480727106780e-02, 3.95203228496179e-02,
    4.11426062754473e-02, 4.28158427484514e-02, 4.45409421992040e-02, 4.63188035677549e-02,
    4.81503136331539e-02, 5.00363458351569e-02, 5.19777590900020e-02, 5.39753966021849e-02,
    5.60300846742034e-02, 5.81426315162746e-02, 6.03138260580512e-02, 6.25444367643978e-02,
    6.48352104572970e-02, 6.71868711459793e-02, 6.96001188673719e-02, 7.20756285389750e-02,
    7.46140488262654e-02, 7.72160010267316e-02, 7.98820779726232e-02, 8.26128429544927e-02,
    8.54088286675777e-02, 8.82705361830582e-02, 9.11984339461741e-02, 9.41929568031774e-02,
    9.72545050590281e-02, 1.00383443567717e-01, 1.03580100857037e-01, 1.06844768289579e-01,
    1.10177699261657e-01, 1.13579108441822e-01, 1.17049171050538e-01, 1.20588022182535e-01,
    1.24195756173280e-01, 1.27872426010912e-01, 1.31618042794930e-01, 1.35432575242816e-01,
    1.39315949245703e-01, 1.43268047474087e-01, 1.47288709034532e-01, 1.51377729178151e-01,
    1.55534859061632e-01, 1.59759805561403e-01, 1.64052231141499e-01, 1.68411753775519e-01,
    1.72837946923040e-01, 1.77330339560672e-01, 1.81888416267903e-01, 1.86511617367733e-01,
    1.91199339122020e-01, 1.95950933981335e-01, 2.00765710889057e-01, 2.05642935639291e-01,
    2.10581831288137e-01, 2.15581578617707e-01, 2.20641316652216e-01, 2.25760143225353e-01,
    2.30937115598067e-01, 2.36171251125806e-01, 2.41461527974152e-01, 2.46806885881724e-01,
    2.52206226969130e-01, 2.57658416592664e-01, 2.63162284241399e-01, 2.68716624476208e-01,
    2.74320197909225e-01, 2.79971732222159e-01, 2.85669923221827e-01, 2.91413435931227e-01,
    2.97200905714385e-01, 3.03030939433207e-01, 3.08902116634490e-01, 3.14812990765201e-01,
    3.20762090414151e-01, 3.26747920578082e-01, 3.32768963950214e-01, 3.38823682229270e-01,
    3.44910517446948e-01, 3.51027893311837e-01, 3.57174216567728e-01, 3.63347878364291e-01,
    3.69547255638081e-01, 3.75770712501824e-01, 3.82016601639972e-01, 3.88283265708501e-01,
    3.94569038736938e-01, 4.00872247530672e-01, 4.07191213071539e-01, 4.13524251914783e-01,
    4.19869677580490e-01, 4.26225801937588e-01, 4.32590936578636e-01, 4.38963394183549e-01,
    4.45341489870548e-01, 4.51723542532611e-01, 4.58107876157773e-01, 4.64492821131656e-01,
    4.70876715520676e-01, 4.77257906334441e-01, 4.83634750765871e-01, 4.90005617407664e-01,
    4.96368887443787e-01, 5.02722955814722e-01, 5.09066232355263e-01, 5.15397142903715e-01,
    5.21714130381463e-01, 5.28015655841842e-01, 5.34300199487421e-01, 5.40566261654800e-01,
    5.46812363766107e-01, 5.53037049246480e-01, 5.59238884406841e-01, 5.65416459291362e-01,
    5.71568388489084e-01, 5.77693311909221e-01, 5.83789895519742e-01, 5.89856832048884e-01,
    5.95892841649329e-01, 6.01896672524822e-01, 6.07867101519094e-01, 6.13802934666994e-01,
    6.19703007707785e-01, 6.25566186560671e-01, 6.31391367762613e-01, 6.37177478868589e-01,
    6.42923478814490e-01, 6.48628358242911e-01, 6.54291139792144e-01, 6.59910878348698e-01,
    6.65486661263770e-01, 6.71017608534112e-01, 6.76502872947748e-01, 6.81941640195123e-01,
    6.87333128946202e-01, 6.92676590894150e-01, 6.97971310766239e-01, 7.03216606302645e-01,
    7.08411828203845e-01, 7.13556360047349e-01, 7.18649618174538e-01, 7.23691051548389e-01,
    7.28680141582900e-01, 7.33616401945045e-01, 7.38499378330118e-01, 7.43328648211347e-01,
    7.48103820564610e-01, 7.52824535569237e-01, 7.57490464285720e-01, 7.62101308311306e-01,
    7.66656799414387e-01, 7.71156699148607e-01, 7.75600798447622e-01, 7.79988917201486e-01,
    7.84320903815561e-01, 7.88596634752899e-01, 7.92816014061060e-01, 7.96978972884278e-01,
    8.01085468961891e-01, 8.05135486113981e-01, 8.09129033715143e-01, 8.13066146157237e-01,
    8.16946882302096e-01, 8.20771324924991e-01, 8.24539580149792e-01, 8.28251776876634e-01,
    8.31908066202958e-01, 8.35508620838744e-01, 8.39053634516740e-01, 8.42543321398500e-01,
    8.45977915476982e-01, 8.49357669976488e-01, 8.52682856750667e-01, 8.55953765679309e-01,
    8.59170704064624e-01, 8.62333996027684e-01, 8.65443981905708e-01, 8.68501017650772e-01,
    8.71505474230624e-01, 8.74457737032158e-01, 8.77358205268125e-01, 8.80207291387628e-01,
    8.83005420490945e-01, 8.85753029749165e-01, 8.88450567829126e-01, 8.91098494324118e-01,
    8.93697279190791e-01, 8.96247402192675e-01, 8.98749352350713e-01, 9.01203627401188e-01,
    9.03610733261370e-01, 9.05971183503238e-01, 9.08285498835578e-01, 9.10554206594731e-01,
    9.12777840244283e-01, 9.14956938883921e-01, 9.17092046767696e-01, 9.19183712831904e-01,
    9.21232490232748e-01, 9.23238935894001e-01, 9.25203610064754e-01, 9.27127075887462e-01,
    9.29009898976332e-01, 9.30852647006195e-01, 9.32655889311950e-01, 9.34420196498621e-01,
    9.36146140062095e-01, 9.37834292020583e-01, 9.39485224556811e-01, 9.41099509670981e-01,
    9.42677718844464e-01, 9.44220422714214e-01, 9.45728190757911e-01, 9.47201590989742e-01,
    9.48641189666796e-01, 9.50047551006004e-01, 9.51421236911553e-01, 9.52762806712688e-01,
    9.54072816911803e-01, 9.55351820942737e-01, 9.56600368939149e-01, 9.57819007512861e-01,
    9.59008279542036e-01, 9.60168723969088e-01, 9.61300875608131e-01, 9.62405264961885e-01,
    9.63482418047839e-01, 9.64532856233544e-01, 9.65557096080866e-01, 9.66555649199025e-01,
    9.67529022106284e-01, 9.68477716100074e-01, 9.69402227135394e-01, 9.70303045711346e-01,
    9.71180656765545e-01, 9.72035539576305e-01, 9.72868167672357e-01, 9.73679008749944e-01,
    9.74468524597088e-01, 9.75237171024848e-01, 9.75985397805392e-01, 9.76713648616662e-01,
    9.77422360993478e-01, 9.78111966284871e-01, 9.78782889617446e-01, 9.79435549864635e-01,
    9.80070359621575e-01, 9.80687725185508e-01, 9.81288046541452e-01, 9.81871717352996e-01,
    9.82439124958029e-01, 9.82990650369210e-01, 9.83526668279017e-01, 9.84047547069199e-01,
    9.84553648824430e-01, 9.85045329350038e-01, 9.85522938193598e-01, 9.85986818670243e-01,
    9.86437307891540e-01, 9.86874736797720e-01, 9.87299430193187e-01, 9.87711706785062e-01,
    9.88111879224671e-01, 9.88500254151796e-01, 9.88877132241567e-01, 9.89242808253824e-01,
    9.89597571084828e-01, 9.89941703821188e-01, 9.90275483795853e-01, 9.90599182646043e-01,
    9.90913066373014e-01, 9.91217395403515e-01, 9.91512424652793e-01, 9.91798403589095e-01,
    9.92075576299482e-01, 9.92344181556892e-01, 9.92604452888331e-01, 9.92856618644070e-01,
    9.93100902067793e-01, 9.93337521367545e-01, 9.93566689787423e-01, 9.93788615679921e-01,
    9.94003502578800e-01, 9.94211549272455e-01, 9.94412949877658e-01, 9.94607893913613e-01,
    9.94796566376248e-01, 9.94979147812668e-01, 9.95155814395706e-01, 9.95326737998498e-01,
    9.95492086269015e-01, 9.95652022704518e-01, 9.95806706725832e-01, 9.95956293751431e-01,
    9.96100935271246e-01, 9.96240778920165e-01, 9.96375968551168e-01, 9.96506644308056e-01,
    9.96632942697735e-01, 9.96754996661993e-01, 9.96872935648769e-01, 9.96986885682836e-01,
    9.97096969435904e-01, 9.97203306296065e-01, 9.97306012436605e-01, 9.97405200884104e-01,
    9.97500981585823e-01, 9.97593461476368e-01, 9.97682744543563e-01, 9.97768931893561e-01,
    9.97852121815142e-01, 9.97932409843191e-01, 9.98009888821341e-01, 9.98084648963767e-01,
    9.98156777916110e-01, 9.98226360815532e-01, 9.98293480349882e-01, 9.98358216815963e-01,
    9.98420648176911e-01, 9.98480850118650e-01, 9.98538896105433e-01, 9.98594857434485e-01,
    9.98648803289701e-01, 9.98700800794427e-01, 9.98750915063327e-01, 9.98799209253317e-01,
    9.98845744613568e-01, 9.98890580534601e-01, 9.98933774596447e-01, 9.98975382615910e-01,
    9.99015458692886e-01, 9.99054055255804e-01, 9.99091223106137e-01, 9.99127011462038e-01,
    9.99161468001064e-01, 9.99194638902020e-01, 9.99226568885938e-01, 9.99257301256165e-01,
    9.99286877937598e-01, 9.99315339515079e-01, 9.99342725270909e-01, 9.99369073221572e-01,
    9.99394420153600e-01, 9.99418801658631e-01, 9.99442252167669e-01, 9.99464804984543e-01,
    9.99486492318582e-01, 9.99507345316516e-01, 9.99527394093608e-01, 9.99546667764061e-01,
    9.99565194470653e-01, 9.99583001413660e-01, 9.99600114879064e-01, 9.99616560266049e-01,
    9.99632362113816e-01, 9.99647544127703e-01, 9.99662129204641e-01, 9.99676139457962e-01,
    9.99689596241543e-01, 9.99702520173345e-01, 9.99714931158296e-01, 9.99726848410593e-01,
    9.99738290475395e-01, 9.99749275249929e-01, 9.99759820004026e-01, 9.99769941400103e-01,
    9.99779655512568e-01, 9.99788977846719e-01, 9.99797923357096e-01, 9.99806506465324e-01,
    9.99814741077439e-01, 9.99822640600748e-01, 9.99830217960178e-01, 9.99837485614165e-01,
    9.99844455570092e-01, 9.99851139399252e-01, 9.99857548251406e-01, 9.99863692868883e-01,
    9.99869583600268e-01, 9.99875230413697e-01, 9.99880642909734e-01, 9.99885830333870e-01,
    9.99890801588641e-01, 9.99895565245373e-01, 9.99900129555574e-01, 9.99904502461968e-01,
    9.99908691609193e-01, 9.99912704354159e-01, 9.99916547776096e-01, 9.99920228686260e-01,
    9.99923753637372e-01, 9.99927128932712e-01, 9.99930360634957e-01, 9.99933454574727e-01,
    9.99936416358846e-01, 9.99939251378344e-01, 9.99941964816201e-01, 9.99944561654836e-01,
    9.99947046683347e-01, 9.99949424504515e-01, 9.99951699541578e-01, 9.99953876044785e-01,
    9.99955958097710e-01, 9.99957949623387e-01, 9.99959854390209e-01, 9.99961676017648e-01,
    9.99963417981767e-01, 9.99965083620557e-01, 9.99966676139077e-01, 9.99968198614434e-01,
    9.99969654000575e-01, 9.99971045132928e-01, 9.99972374732870e-01, 9.99973645412050e-01,
    9.99974859676547e-01, 9.99976019930894e-01, 9.99977128481956e-01, 9.99978187542673e-01,
    9.99979199235664e-01, 9.99980165596705e-01, 9.99981088578088e-01, 9.99981970051853e-01,
    9.99982811812907e-01, 9.99983615582027e-01, 9.99984383008753e-01, 9.99985115674189e-01,
    9.99985815093683e-01, 9.99986482719416e-01, 9.99987119942900e-01, 9.99987728097382e-01,
    9.99988308460149e-01, 9.99988862254774e-01, 9.99989390653239e-01, 9.99989894778012e-01,
    9.99990375704031e-01, 9.99990834460616e-01, 9.99991272033311e-01, 9.99991689365652e-01,
    9.99992087360867e-01, 9.99992466883522e-01, 9.99992828761094e-01, 9.99993173785476e-01,
    9.99993502714452e-01, 9.99993816273080e-01, 9.99994115155052e-01, 9.99994400023980e-01,
    9.99994671514642e-01, 9.99994930234179e-01, 9.99995176763241e-01, 9.99995411657091e-01,
    9.99995635446669e-01, 9.99995848639601e-01, 9.99996051721188e-01, 9.99996245155335e-01,
    9.99996429385461e-01, 9.99996604835359e-01, 9.99996771910026e-01, 9.99996930996465e-01,
    9.99997082464452e-01, 9.99997226667261e-01, 9.99997363942379e-01, 9.99997494612178e-01,
    9.99997618984566e-01, 9.99997737353601e-01, 9.99997850000100e-01, 9.99997957192204e-01,
    9.99998059185927e-01, 9.99998156225687e-01, 9.99998248544801e-01, 9.99998336365982e-01,
    9.99998419901788e-01, 9.99998499355079e-01, 9.99998574919433e-01, 9.99998646779561e-01,
    9.99998715111692e-01, 9.99998780083950e-01, 9.99998841856713e-01, 9.99998900582957e-01,
    9.99998956408581e-01, 9.99999009472726e-01, 9.99999059908075e-01, 9.99999107841141e-01,
    9.99999153392543e-01, 9.99999196677275e-01, 9.99999237804950e-01, 9.99999276880050e-01,
    9.99999314002159e-01, 9.99999349266173e-01, 9.99999382762527e-01, 9.99999414577390e-01,
    9.99999444792855e-01, 9.99999473487136e-01, 9.99999500734735e-01, 9.99999526606620e-01,
    9.99999551170379e-01, 9.99999574490377e-01, 9.99999596627916e-01, 9.99999617641357e-01,
    9.99999637586272e-01, 9.99999656515561e-01, 9.99999674479590e-01, 9.99999691526291e-01,
    9.99999707701293e-01, 9.99999723048017e-01, 9.99999737607782e-01, 9.99999751419909e-01,
    9.99999764521806e-01, 9.99999776949067e-01, 9.99999788735547e-01, 9.99999799913456e-01,
    9.99999810513425e-01, 9.99999820564590e-01, 9.99999830094657e-01, 9.99999839129971e-01,
    9.99999847695583e-01, 9.99999855815310e-01, 9.99999863511795e-01, 9.99999870806562e-01,
    9.99999877720068e-01, 9.99999884271757e-01, 9.99999890480112e-01, 9.99999896362689e-01,
    9.99999901936178e-01, 9.99999907216430e-01, 9.99999912218511e-01, 9.99999916956727e-01,
    9.99999921444671e-01, 9.99999925695254e-01, 9.99999929720735e-01, 9.99999933532759e-01,
    9.99999937142381e-01, 9.99999940560104e-01, 9.99999943795894e-01, 9.99999946859214e-01,
    9.99999949759049e-01, 9.99999952503924e-01, 9.99999955101936e-01, 9.99999957560762e-01,
    9.99999959887694e-01, 9.99999962089651e-01, 9.99999964173192e-01, 9.99999966144547e-01,
    9.99999968009621e-01, 9.99999969774021e-01, 9.99999971443060e-01, 9.99999973021780e-01,
    9.99999974514964e-01, 9.99999975927144e-01, 9.99999977262621e-01, 9.99999978525471e-01,
    9.99999979719562e-01, 9.99999980848553e-01, 9.99999981915922e-01, 9.99999982924959e-01,
    9.99999983878786e-01, 9.99999984780361e-01, 9.99999985632485e-01, 9.99999986437814e-01,
    9.99999987198866e-01, 9.99999987918024e-01, 9.99999988597546e-01, 9.99999989239573e-01,
    9.99999989846131e-01, 9.99999990419140e-01, 9.99999990960418e-01, 9.99999991471686e-01,
    9.99999991954575e-01, 9.99999992410628e-01, 9.99999992841307e-01, 9.99999993247997e-01,
    9.99999993632004e-01, 9.99999993994572e-01, 9.99999994336873e-01, 9.99999994660016e-01,
    9.99999994965054e-01, 9.99999995252982e-01, 9.99999995524739e-01,
};

}  // namespace sbmtest::detail
