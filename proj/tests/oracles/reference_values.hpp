// Generated by make_reference.py; do not edit.
#pragma once

struct MlReference { double alpha, beta, z_re, z_im, re, im; };
struct WrightReference { double alpha, beta, z, value; };

inline constexpr MlReference kMlReference[] = {
    {0.1, 0.3, -2.0, 0.0, 0.08536437108425425, 0.0},
    {0.1, 0.3, -1.2, 0.0, 0.12284385442488714, 0.0},
    {0.1, 0.3, -0.4, 0.0, 0.21484440641414776, 0.0},
    {0.1, 0.3, 0.3, 0.0, 0.5477557433396475, 0.0},
    {0.1, 0.3, 1.5, 0.0, 1.8890657626987667e+27, 0.0},
    {0.1, 0.3, 1.8, 0.0, 7.084822427335133e+157, 0.0},
    {0.1, 0.3, 1.0, 1.0, -0.116872175784719, 0.21014849147016096},
    {0.1, 0.3, -1.0, 1.5, 0.07466771088723818, 0.06999087762210747},
    {0.1, 0.5, -2.0, 0.0, 0.16318500422722146, 0.0},
    {0.1, 0.5, -1.2, 0.0, 0.22886120895415962, 0.0},
    {0.1, 0.5, -0.4, 0.0, 0.3806333345482603, 0.0},
    {0.1, 0.5, 0.3, 0.0, 0.8692859001903738, 0.0},
    {0.1, 0.5, 1.5, 0.0, 8.39584783421674e+26, 0.0},
    {0.1, 0.5, 1.8, 0.0, 2.1866735886836828e+157, 0.0},
    {0.1, 0.5, 1.0, 1.0, -0.12033785386212505, 0.4509845637716603},
    {0.1, 0.5, -1.0, 1.5, 0.14955856251945127, 0.12605578688892427},
    {0.1, 1.0, -2.0, 0.0, 0.3200153359597274, 0.0},
    {0.1, 1.0, -1.2, 0.0, 0.4400807689106189, 0.0},
    {0.1, 1.0, -0.4, 0.0, 0.7030796353816415, 0.0},
    {0.1, 1.0, 0.3, 0.0, 1.4564737463144946, 0.0},
    {0.1, 1.0, 1.5, 0.0, 1.1056260522425338e+26, 0.0},
    {0.1, 1.0, 1.8, 0.0, 1.157234663522923e+156, 0.0},
    {0.1, 1.0, 1.0, 1.0, -0.07822446217449892, 0.9480146658877189},
    {0.1, 1.0, -1.0, 1.5, 0.30318041729019224, 0.23566872487308474},
    {0.1, 1.7, -2.0, 0.0, 0.3716585933506212, 0.0},
    {0.1, 1.7, -1.2, 0.0, 0.5058705496860095, 0.0},
    {0.1, 1.7, -0.4, 0.0, 0.7911594758357507, 0.0},
    {0.1, 1.7, 0.3, 0.0, 1.5540416263729524, 0.0},
    {0.1, 1.7, 1.5, 0.0, 6.470970950482139e+24, 0.0},
    {0.1, 1.7, 1.8, 0.0, 1.890226720844906e+154, 0.0},
    {0.1, 1.7, 1.0, 1.0, 0.010238881726674663, 1.1298713944151364},
    {0.1, 1.7, -1.0, 1.5, 0.3579379973402104, 0.26657130806886453},
    {0.25, 0.3, -6.0, 0.0, 0.012213996058861313, 0.0},
    {0.25, 0.3, -3.0, 0.0, 0.028432853058816723, 0.0},
    {0.25, 0.3, -1.0, 0.0, 0.09280694282306642, 0.0},
    {0.25, 0.3, 0.5, 0.0, 1.121734973574813, 0.0},
    {0.25, 0.3, 2.0, 0.0, 247545872.67359334, 0.0},
    {0.25, 0.3, 4.0, 0.0, 2.9323468171889258e+113, 0.0},
    {0.25, 0.3, 5.0, 0.0, 9.84526007358039e+273, 0.0},
    {0.25, 0.3, -3.0, 3.0, 0.010449187662034948, 0.01557491550700399},
    {0.25, 0.3, 2.0, -4.0, -0.013519369207189918, -0.004559397602133309},
    {0.25, 0.3, 0.0, 5.0, -0.006484977557623303, 0.012479007146255236},
    {0.25, 0.5, -6.0, 0.0, 0.04521653299686632, 0.0},
    {0.25, 0.5, -3.0, 0.0, 0.08708261429662854, 0.0},
    {0.25, 0.5, -1.0, 0.0, 0.21199340525120658, 0.0},
    {0.25, 0.5, 0.5, 0.0, 1.4921176083491505, 0.0},
    {0.25, 0.5, 2.0, 0.0, 142177768.23601058, 0.0},
    {0.25, 0.5, 4.0, 0.0, 9.673137056026263e+112, 0.0},
    {0.25, 0.5, 5.0, 0.0, 2.7167594696637365e+273, 0.0},
    {0.25, 0.5, -3.0, 3.0, 0.04709788307269875, 0.04417992606987291},
    {0.25, 0.5, 2.0, -4.0, -0.029936380664381146, -0.056335043774279094},
    {0.25, 0.5, 0.0, 5.0, 0.00045027273172231337, 0.0567259667172638},
    {0.25, 1.0, -6.0, 0.0, 0.12159223844551911, 0.0},
    {0.25, 1.0, -3.0, 0.0, 0.2190044275604068, 0.0},
    {0.25, 1.0, -1.0, 0.0, 0.4638527608017133, 0.0},
    {0.25, 1.0, 0.5, 0.0, 2.079614221009051, 0.0},
    {0.25, 1.0, 2.0, 0.0, 35544441.50993078, 0.0},
    {0.25, 1.0, 4.0, 0.0, 6.045710660016414e+111, 0.0},
    {0.25, 1.0, 5.0, 0.0, 1.0867037878654947e+272, 0.0},
    {0.25, 1.0, -3.0, 3.0, 0.133553716179162, 0.10728083982331842},
    {0.25, 1.0, 2.0, -4.0, -0.06152771323249101, -0.18528477507490973},
    {0.25, 1.0, 0.0, 5.0, 0.02254957243264136, 0.16094074915096204},
    {0.25, 1.7, -6.0, 0.0, 0.16188446114580973, 0.0},
    {0.25, 1.7, -3.0, 0.0, 0.28354333235368895, 0.0},
    {0.25, 1.7, -1.0, 0.0, 0.565017528928667, 0.0},
    {0.25, 1.7, 0.5, 0.0, 2.0022739407925894, 0.0},
    {0.25, 1.7, 2.0, 0.0, 5103729.245013468, 0.0},
    {0.25, 1.7, 4.0, 0.0, 1.2464629753336995e+110, 0.0},
    {0.25, 1.7, 5.0, 0.0, 1.1994859594722233e+270, 0.0},
    {0.25, 1.7, -3.0, 3.0, 0.18132311281178698, 0.13643029811962704},
    {0.25, 1.7, 2.0, -4.0, -0.06926762412249737, -0.26541162816172925},
    {0.25, 1.7, 0.0, 5.0, 0.042346877175833776, 0.21822696074792192},
    {0.5, 0.3, -40.0, 0.0, -0.004145379296106707, 0.0},
    {0.5, 0.3, -20.0, 0.0, -0.00798123489273762, 0.0},
    {0.5, 0.3, -8.0, 0.0, -0.017521120036873405, 0.0},
    {0.5, 0.3, -3.0, 0.0, -0.028877099009351346, 0.0},
    {0.5, 0.3, -1.0, 0.0, 0.011118455664361185, 0.0},
    {0.5, 0.3, 0.5, 0.0, 1.2567908036072408, 0.0},
    {0.5, 0.3, 3.0, 0.0, 75448.4827538348, 0.0},
    {0.5, 0.3, 8.0, 0.0, 2.2919377575326654e+29, 0.0},
    {0.5, 0.3, 20.0, 0.0, 6.922528475863097e+175, 0.0},
    {0.5, 0.3, -10.0, 10.0, -0.00863038850748139, -0.007367455888422124},
    {0.5, 0.3, 5.0, 12.0, 0.004195863564984254, -0.013229986369800918},
    {0.5, 0.3, 0.0, -25.0, -0.00037540823680527356, 0.006884736106117945},
    {0.5, 0.5, -40.0, 0.0, 0.00017614421264374196, 0.0},
    {0.5, 0.5, -20.0, 0.0, 0.0007026087267299006, 0.0},
    {0.5, 0.5, -8.0, 0.0, 0.004308253940708866, 0.0},
    {0.5, 0.5, -3.0, 0.0, 0.027186130003586436, 0.0},
    {0.5, 0.5, -1.0, 0.0, 0.13660600739194928, 0.0},
    {0.5, 0.5, 0.5, 0.0, 1.5403698281390348, 0.0},
    {0.5, 0.5, 3.0, 0.0, 48618.53075158231, 0.0},
    {0.5, 0.5, 8.0, 0.0, 9.976238529298587e+28, 0.0},
    {0.5, 0.5, 20.0, 0.0, 2.0885878759056577e+175, 0.0},
    {0.5, 0.5, -10.0, 10.0, 1.0576242062764044e-05, 0.0014103417789556104},
    {0.5, 0.5, 5.0, 12.0, -0.0011750683100134054, -0.0012001984467895346},
    {0.5, 0.5, 0.0, -25.0, -0.00045243926825554317, -3.704014351641709e-36},
    {0.5, 1.0, -40.0, 0.0, 0.014100335983377814, 0.0},
    {0.5, 1.0, -20.0, 0.0, 0.02817434874105132, 0.0},
    {0.5, 1.0, -8.0, 0.0, 0.06998516620088092, 0.0},
    {0.5, 1.0, -3.0, 0.0, 0.17900115118138996, 0.0},
    {0.5, 1.0, -1.0, 0.0, 0.427583576155807, 0.0},
    {0.5, 1.0, 0.5, 0.0, 1.952360489182557, 0.0},
    {0.5, 1.0, 3.0, 0.0, 16205.988853999586, 0.0},
    {0.5, 1.0, 8.0, 0.0, 1.2470298161623233e+28, 0.0},
    {0.5, 1.0, 20.0, 0.0, 1.0442939379528289e+174, 0.0},
    {0.5, 1.0, -10.0, 10.0, 0.028279467454232456, 0.028138433276336895},
    {0.5, 1.0, 5.0, 12.0, -0.016811986039351023, 0.040108726805084545},
    {0.5, 1.0, 0.0, -25.0, 1.4815942967373192e-37, -0.022585680912640474},
    {0.5, 1.7, -40.0, 0.0, 0.026750113056544508, 0.0},
    {0.5, 1.7, -20.0, 0.0, 0.052558876791629926, 0.0},
    {0.5, 1.7, -8.0, 0.0, 0.12457889763052929, 0.0},
    {0.5, 1.7, -3.0, 0.0, 0.28742492438164274, 0.0},
    {0.5, 1.7, -1.0, 0.0, 0.5823498522901579, 0.0},
    {0.5, 1.7, 0.5, 0.0, 1.7880979696558117, 0.0},
    {0.5, 1.7, 3.0, 0.0, 3480.5989421378913, 0.0},
    {0.5, 1.7, 8.0, 0.0, 6.785015680669831e+26, 0.0},
    {0.5, 1.7, 20.0, 0.0, 1.575363442198131e+172, 0.0},
    {0.5, 1.7, -10.0, 10.0, 0.05439620714708151, 0.05065901474124282},
    {0.5, 1.7, 5.0, 12.0, -0.028920642331885318, 0.08054202710375667},
    {0.5, 1.7, 0.0, -25.0, 0.0012332059836654646, -0.043551018153906405},
    {0.7, 0.3, -50.0, 0.0, -0.005410530954964088, 0.0},
    {0.7, 0.3, -20.0, 0.0, -0.013641213267888995, 0.0},
    {0.7, 0.3, -6.0, 0.0, -0.04529525659994223, 0.0},
    {0.7, 0.3, -1.0, 0.0, -0.06533922555140882, 0.0},
    {0.7, 0.3, 1.0, 0.0, 4.038418898001777, 0.0},
    {0.7, 0.3, 6.0, 0.0, 3540602.8173835897, 0.0},
    {0.7, 0.3, 15.0, 0.0, 1.3300710992148825e+22, 0.0},
    {0.7, 0.3, 30.0, 0.0, 4.0023034957612244e+57, 0.0},
    {0.7, 0.3, -20.0, 5.0, -0.01282384714448773, -0.003244804220084895},
    {0.7, 0.3, 3.0, -25.0, 0.001437887284970618, 0.010570213676617674},
    {0.7, 0.3, 0.0, 40.0, 6.474850017339139e-05, -0.006719936498128482},
    {0.7, 0.5, -50.0, 0.0, -0.0033943345213484372, 0.0},
    {0.7, 0.5, -20.0, 0.0, -0.008294519443159707, 0.0},
    {0.7, 0.5, -6.0, 0.0, -0.02359032380261179, 0.0},
    {0.7, 0.5, -1.0, 0.0, 0.06913897433937366, 0.0},
    {0.7, 0.5, 1.0, 0.0, 4.0288398776977745, 0.0},
    {0.7, 0.5, 6.0, 0.0, 2122014.186344661, 0.0},
    {0.7, 0.5, 15.0, 0.0, 6.135483363825172e+21, 0.0},
    {0.7, 0.5, 30.0, 0.0, 1.5145212597133275e+57, 0.0},
    {0.7, 0.5, -20.0, 5.0, -0.00784893365367108, -0.0018800391417894786},
    {0.7, 0.5, 3.0, -25.0, 0.0006789393457296694, 0.006833841881706409},
    {0.7, 0.5, 0.0, 40.0, -5.885555356096158e-05, -0.004301447376354003},
    {0.7, 1.0, -50.0, 0.0, 0.006793665670383094, 0.0},
    {0.7, 1.0, -20.0, 0.0, 0.01739569829160398, 0.0},
    {0.7, 1.0, -6.0, 0.0, 0.0632613348606888, 0.0},
    {0.7, 1.0, -1.0, 0.0, 0.3996119781155994, 0.0},
    {0.7, 1.0, 1.0, 0.0, 3.704146145437586, 0.0},
    {0.7, 1.0, 6.0, 0.0, 590100.4138518061, 0.0},
    {0.7, 1.0, 15.0, 0.0, 8.867140661432548e+20, 0.0},
    {0.7, 1.0, 30.0, 0.0, 1.334101165253741e+56, 0.0},
    {0.7, 1.0, -20.0, 5.0, 0.016295783466054453, 0.004236186077517858},
    {0.7, 1.0, 3.0, -25.0, -0.001991734917591643, -0.013074386421057802},
    {0.7, 1.0, 0.0, 40.0, -0.00016799841245321203, 0.00835520010160043},
    {0.7, 1.7, -50.0, 0.0, 0.019864126686592338, 0.0},
    {0.7, 1.7, -20.0, 0.0, 0.0491302150854198, 0.0},
    {0.7, 1.7, -6.0, 0.0, 0.15612311085655187, 0.0},
    {0.7, 1.7, -1.0, 0.0, 0.6003880218844007, 0.0},
    {0.7, 1.7, 1.0, 0.0, 2.704146145437586, 0.0},
    {0.7, 1.7, 6.0, 0.0, 98349.90230863435, 0.0},
    {0.7, 1.7, 15.0, 0.0, 5.911427107621699e+19, 0.0},
    {0.7, 1.7, 30.0, 0.0, 4.447003884179137e+54, 0.0},
    {0.7, 1.7, -20.0, 5.0, 0.04634180061427412, 0.011373640849692637},
    {0.7, 1.7, 3.0, -25.0, -0.004225734296886955, -0.03957258128107723},
    {0.7, 1.7, 0.0, 40.0, 0.00020888000254001076, 0.02500419996031133},
    {0.9, 0.3, -50.0, 0.0, -0.005586752540865674, 0.0},
    {0.9, 0.3, -25.0, 0.0, -0.011561083130271677, 0.0},
    {0.9, 0.3, -7.0, 0.0, -0.05084957516854646, 0.0},
    {0.9, 0.3, -2.0, 0.0, -0.18291656775406478, 0.0},
    {0.9, 0.3, 0.7, 0.0, 1.7930191053077098, 0.0},
    {0.9, 0.3, 4.0, 0.0, 347.18213143057045, 0.0},
    {0.9, 0.3, 12.0, 0.0, 56731106.7746104, 0.0},
    {0.9, 0.3, 25.0, 0.0, 4.557607530509845e+16, 0.0},
    {0.9, 0.3, -30.0, -10.0, -0.00847022120924152, 0.0029846902554998608},
    {0.9, 0.3, 10.0, 10.0, -1475225.053357024, 916228.9401918345},
    {0.9, 0.3, -5.0, 45.0, -0.00045570707555249733, -0.005973631240003553},
    {0.9, 0.5, -50.0, 0.0, -0.00549595414612795, 0.0},
    {0.9, 0.5, -25.0, 0.0, -0.011255476725722142, 0.0},
    {0.9, 0.5, -7.0, 0.0, -0.045611227298727526, 0.0},
    {0.9, 0.5, -2.0, 0.0, -0.10282482036797026, 0.0},
    {0.9, 0.5, 0.7, 0.0, 1.9582166054866497, 0.0},
    {0.9, 0.5, 4.0, 0.0, 255.14947418825622, 0.0},
    {0.9, 0.5, 12.0, 0.0, 32659023.992121328, 0.0},
    {0.9, 0.5, 25.0, 0.0, 2.22886409803789e+16, 0.0},
    {0.9, 0.5, -30.0, -10.0, -0.008306776357872546, 0.0028787123272966714},
    {0.9, 0.5, 10.0, 10.0, -718071.1246993586, 643010.9265312139},
    {0.9, 0.5, -5.0, 45.0, -0.0005107002431248782, -0.0059236377426885554},
    {0.9, 1.0, -50.0, 0.0, 0.002175353076856976, 0.0},
    {0.9, 1.0, -25.0, 0.0, 0.004512147121840188, 0.0},
    {0.9, 1.0, -7.0, 0.0, 0.020553253921495637, 0.0},
    {0.9, 1.0, -2.0, 0.0, 0.16352830001693006, 0.0},
    {0.9, 1.0, 0.7, 0.0, 2.1240621309182166, 0.0},
    {0.9, 1.0, 4.0, 0.0, 118.074366896324, 0.0},
    {0.9, 1.0, 12.0, 0.0, 8212172.520746422, 0.0},
    {0.9, 1.0, 25.0, 0.0, 3727779799664920.0, 0.0},
    {0.9, 1.0, -30.0, -10.0, 0.003300283724776038, -0.0011672466201262809},
    {0.9, 1.0, 10.0, 10.0, -86999.37681805716, 203410.93631231878},
    {0.9, 1.0, -5.0, 45.0, 0.0001722957432322812, 0.002321884320088718},
    {0.9, 1.7, -50.0, 0.0, 0.01721613968296636, 0.0},
    {0.9, 1.7, -25.0, 0.0, 0.03450663520040778, 0.0},
    {0.9, 1.7, -7.0, 0.0, 0.12441001940389251, 0.0},
    {0.9, 1.7, -2.0, 0.0, 0.4015846062821987, 0.0},
    {0.9, 1.7, 0.7, 0.0, 1.7789187189874127, 0.0},
    {0.9, 1.7, 4.0, 0.0, 39.96592996279498, 0.0},
    {0.9, 1.7, 12.0, 0.0, 1188761.818188062, 0.0},
    {0.9, 1.7, 25.0, 0.0, 304904319684483.5, 0.0},
    {0.9, 1.7, -30.0, -10.0, 0.02584292546422838, -0.008645312377815115},
    {0.9, 1.7, 10.0, 10.0, 5784.489847343642, 27584.44559305537},
    {0.9, 1.7, -5.0, 45.0, 0.002050393239059536, 0.01886474952052307},
    {1.0, 0.3, -40.0, 0.0, -0.0061169361790945195, 0.0},
    {1.0, 0.3, -20.0, 0.0, -0.012861586640416351, 0.0},
    {1.0, 0.3, -6.0, 0.0, -0.0655121296659728, 0.0},
    {1.0, 0.3, -1.0, 0.0, -0.20458763391184656, 0.0},
    {1.0, 0.3, 0.1, 0.0, 0.4546523162665946, 0.0},
    {1.0, 0.3, 2.0, 0.0, 12.073439681538225, 0.0},
    {1.0, 0.3, 9.0, 0.0, 37724.226938367894, 0.0},
    {1.0, 0.3, 25.0, 0.0, 685362051152.2837, 0.0},
    {1.0, 0.3, -12.0, 7.0, -0.015483503548320466, -0.010757869800462632},
    {1.0, 0.3, 3.0, -15.0, -131.21920520941268, 33.9991154520038},
    {1.0, 0.3, 0.0, 30.0, 10.27771743896352, -3.372178352799407},
    {1.0, 0.5, -40.0, 0.0, -0.00733499852890326, 0.0},
    {1.0, 0.5, -20.0, 0.0, -0.015325407164895395, 0.0},
    {1.0, 0.5, -6.0, 0.0, -0.06898994646916351, 0.0},
    {1.0, 0.5, -1.0, 0.0, -0.042968122293637445, 0.0},
    {1.0, 0.5, 0.1, 0.0, 0.6848597208998678, 0.0},
    {1.0, 0.5, 2.0, 0.0, 10.538428671807383, 0.0},
    {1.0, 0.5, 9.0, 0.0, 24309.278968856157, 0.0},
    {1.0, 0.5, 25.0, 0.0, 360024496686.94, 0.0},
    {1.0, 0.5, -12.0, 7.0, -0.018527004213528746, -0.012605805598898382},
    {1.0, 0.5, 3.0, -15.0, -78.53460816172792, -1.6530370908208911},
    {1.0, 0.5, 0.0, 30.0, 4.4245090286212205, -3.2385813691438607},
    {1.0, 1.0, -40.0, 0.0, 4.248354255291589e-18, 0.0},
    {1.0, 1.0, -20.0, 0.0, 2.061153622438558e-09, 0.0},
    {1.0, 1.0, -6.0, 0.0, 0.0024787521766663585, 0.0},
    {1.0, 1.0, -1.0, 0.0, 0.36787944117144233, 0.0},
    {1.0, 1.0, 0.1, 0.0, 1.1051709180756477, 0.0},
    {1.0, 1.0, 2.0, 0.0, 7.38905609893065, 0.0},
    {1.0, 1.0, 9.0, 0.0, 8103.083927575384, 0.0},
    {1.0, 1.0, 25.0, 0.0, 72004899337.38588, 0.0},
    {1.0, 1.0, -12.0, 7.0, 4.632135544338118e-06, 4.0366651758190675e-06},
    {1.0, 1.0, 3.0, -15.0, -15.25873962382523, -13.06138042417573},
    {1.0, 1.0, 0.0, 30.0, 0.15425144988758405, -0.9880316240928618},
    {1.0, 1.7, -40.0, 0.0, 0.019409015943611184, 0.0},
    {1.0, 1.7, -20.0, 0.0, 0.03913974958514047, 0.0},
    {1.0, 1.7, -6.0, 0.0, 0.13689731398103464, 0.0},
    {1.0, 1.7, -1.0, 0.0, 0.6398223241687431, 0.0},
    {1.0, 1.7, 0.1, 0.0, 1.167749401192721, 0.0},
    {1.0, 1.7, 2.0, 0.0, 4.201661652946932, 0.0},
    {1.0, 1.7, 9.0, 0.0, 1740.4431835311366, 0.0},
    {1.0, 1.7, 25.0, 0.0, 7564914806.487074, 0.0},
    {1.0, 1.7, -12.0, 7.0, 0.04847261473343206, 0.029112242375870002},
    {1.0, 1.7, 3.0, -15.0, 0.2820846600200942, -3.0106749032870144},
    {1.0, 1.7, 0.0, 30.0, -0.0751881444381873, -0.028520428352682158},
    {1.4, 0.3, -40.0, 0.0, 0.0047510732201844355, 0.0},
    {1.4, 0.3, -15.0, 0.0, 0.06784748431082331, 0.0},
    {1.4, 0.3, -5.0, 0.0, -0.23621560888091467, 0.0},
    {1.4, 0.3, -1.0, 0.0, -0.3880759100614077, 0.0},
    {1.4, 0.3, 1.0, 0.0, 1.986539836225184, 0.0},
    {1.4, 0.3, 6.0, 0.0, 63.77875847213256, 0.0},
    {1.4, 0.3, 20.0, 0.0, 15665.34340388305, 0.0},
    {1.4, 0.3, -20.0, 10.0, -0.12191436662296279, -0.08197435378166648},
    {1.4, 0.3, 8.0, -8.0, -279.2100918297343, 74.49419052217976},
    {1.4, 0.5, -40.0, 0.0, -0.0011159893468348399, 0.0},
    {1.4, 0.5, -15.0, 0.0, 0.046013033276073735, 0.0},
    {1.4, 0.5, -5.0, 0.0, -0.3128982166491342, 0.0},
    {1.4, 0.5, -1.0, 0.0, -0.1611962104803428, 0.0},
    {1.4, 0.5, 1.0, 0.0, 2.048989426018574, 0.0},
    {1.4, 0.5, 6.0, 0.0, 49.39890457232214, 0.0},
    {1.4, 0.5, 20.0, 0.0, 10211.248058332016, 0.0},
    {1.4, 0.5, -20.0, 10.0, -0.09886429157455608, -0.020298395863435702},
    {1.4, 0.5, 8.0, -8.0, -202.07706333220548, 30.248372941803474},
    {1.4, 1.0, -40.0, 0.0, -0.006904779042152269, 0.0},
    {1.4, 1.0, -15.0, 0.0, -0.006406503742702208, 0.0},
    {1.4, 1.0, -5.0, 0.0, -0.20937585736144682, 0.0},
    {1.4, 1.0, -1.0, 0.0, 0.380003987485006, 0.0},
    {1.4, 1.0, 1.0, 0.0, 2.0518790617765927, 0.0},
    {1.4, 1.0, 6.0, 0.0, 26.073516438244205, 0.0},
    {1.4, 1.0, 20.0, 0.0, 3502.8904808022503, 0.0},
    {1.4, 1.0, -20.0, 10.0, -0.03478167228699713, 0.016957701124999607},
    {1.4, 1.0, 8.0, -8.0, -85.14825744777548, -11.290542915065952},
    {1.4, 1.7, -40.0, 0.0, 0.008238041983600154, 0.0},
    {1.4, 1.7, -15.0, 0.0, 0.017761684550224487, 0.0},
    {1.4, 1.7, -5.0, 0.0, 0.11409767228902107, 0.0},
    {1.4, 1.7, -1.0, 0.0, 0.7223486626255982, 0.0},
    {1.4, 1.7, 1.0, 0.0, 1.6522670836609934, 0.0},
    {1.4, 1.7, 6.0, 0.0, 10.574080953261394, 0.0},
    {1.4, 1.7, 20.0, 0.0, 783.2504565565241, 0.0},
    {1.4, 1.7, -20.0, 10.0, 0.016607997691852807, 0.012402716535009727},
    {1.4, 1.7, 8.0, -8.0, -22.12740969402989, -12.815635878757423},
};

inline constexpr WrightReference kWrightReference[] = {
    {0.2, 0.0, 0.3, 0.0406077373599926},
    {0.2, 0.0, 1.0, 0.07552957965157839},
    {0.2, 0.0, 2.5, 0.048498235470662725},
    {0.2, 0.0, 5.0, 0.007771355388519054},
    {0.3, 0.7, 0.5, 0.5610016487316642},
    {0.3, 0.7, 2.5, 0.10502855072317221},
    {0.3, 0.7, 5.0, 0.0064665392145191345},
    {0.3, 0.7, 8.0, 0.00010608480026315099},
    {0.5, 0.25, 0.5, 0.34771929982549926},
    {0.5, 0.25, 2.0, 0.21739724288367712},
    {0.5, 0.25, 6.0, 0.0001213957116579459},
    {0.6, -0.3, 0.2, -0.20352088402326401},
    {0.6, -0.3, 1.0, 0.053444570526029356},
    {0.6, -0.3, 2.0, 0.2727189586580184},
    {0.6, -0.3, 4.0, 0.009233298188425077},
    {0.75, 1.0, 0.5, 0.8218686550251494},
    {0.75, 1.0, 1.5, 0.25241521364790404},
    {0.75, 1.0, 3.0, 2.927272528177259e-05},
    {0.75, 1.0, 4.5, 1.1432472751295796e-20},
    {0.9, 0.1, 0.3, 0.1819406945075017},
    {0.9, 0.1, 1.0, 1.0081467456212712},
    {0.9, 0.1, 1.5, 0.4557525105706377},
    {0.9, 0.1, 1.8, 8.56509555679656e-06},
};
