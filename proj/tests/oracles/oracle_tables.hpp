// Generated by generate_oracles.py (mpmath, 50 digits). Do not edit.
#pragma once

namespace pkgamma::oracle {

struct OraclePoint {
  double z;
  double value;
};

inline constexpr OraclePoint kLnGammaPositive[] = {
    {1e-06, 13.815509980749431714},
    {1.5848931924611134e-06, 13.354992624542353051},
    {2.51188643150958e-06, 12.894475070871648502},
    {3.9810717055349725e-06, 12.433957204243930362},
    {6.309573444801932e-06, 11.973438841617149322},
    {9.999999999999999e-06, 11.512919692895825795},
    {1.5848931924611134e-05, 11.052399298326233248},
    {2.51188643150958e-05, 10.591876929289578184},
    {3.981071705534972e-05, 10.131351431107782906},
    {6.309573444801932e-05, 9.6708209740028796777},
    {9.999999999999999e-05, 9.2102826586339623461},
    {0.00015848931924611134, 8.7497318915174280606},
    {0.000251188643150958, 8.2891613966467045486},
    {0.00039810717055349724, 7.828559652811567708},
    {0.0006309573444801932, 7.367908426447246358},
    {0.001, 6.9071788853838536617},
    {0.0015848931924611134, 6.4463254995557721529},
    {0.00251188643150958, 5.9852765246642632285},
    {0.0039810717055349725, 5.5239192962444072876},
    {0.006309573444801932, 5.0620778627371668149},
    {0.01, 4.5994798780420217016},
    {0.015848931924611134, 4.1357099316981199379},
    {0.0251188643150958, 3.6701498436872588371},
    {0.03981071705534973, 3.2019186611069266285},
    {0.06309573444801932, 2.7298600090216395639},
    {0.09999999999999999, 2.2527126517342060467},
    {0.15848931924611134, 1.7698021918542664352},
    {0.251188643150958, 1.283009703755343958},
    {0.39810717055349726, 0.80153915144325241941},
    {0.6309573444801932, 0.35223525245987390425},
    {1.0, 0.0},
    {1.5848931924611134, -0.11439757981615581275},
    {2.51188643150958, 0.2930754684449340177},
    {3.9810717055349722, 1.7680342389160096887},
    {6.3095734448019325, 5.3241913195849411328},
    {10.0, 12.801827480081469611},
    {15.848931924611135, 27.485930101097276812},
    {25.118864315095802, 55.165233572412550729},
    {39.81071705534973, 105.93634841101910408},
    {63.09573444801932, 197.26213386349634425},
    {100.0, 359.13420536957539878},
    {158.48931924611134, 642.75461805060378462},
    {251.188643150958, 1135.0872656235662856},
    {398.10717055349727, 1983.1752711419948106},
    {630.9573444801932, 3434.6704389998065629},
    {1000.0, 5905.2204232091812118},
    {1584.8931924611134, 10090.26626713892719},
    {2511.8864315095802, 17150.147804000224506},
    {3981.0717055349724, 29016.025508661979899},
    {6309.573444801932, 48894.623672439694749},
    {10000.0, 82099.717496442377273},
    {15848.931924611135, 137419.91202633028891},
    {25118.8643150958, 229365.60804902097539},
    {39810.71705534973, 381855.69865160245553},
    {63095.73444801933, 634259.48663090837768},
    {100000.0, 1051287.7089736568949},
    {158489.31924611135, 1739168.3612250314195},
    {251188.643150958, 2872075.4751516584903},
    {398107.1705534973, 4735270.8645979020506},
    {630957.3444801932, 7795468.1561098729198},
    {1000000.0, 12815504.56914761166},
};

inline constexpr OraclePoint kLnGammaNegative[] = {
    {-0.5, 1.2655121234846453965},
    {-1.5, 0.86004701537648101451},
    {-2.25, 0.55550154502064747059},
    {-3.7, -1.379739904965824496},
    {-10.1, -13.02097327101149852},
    {-0.001, 6.908333317515028411},
    {-25.5, -58.483116210034927033},
    {-100.3, -363.76620618267625945},
};

inline constexpr OraclePoint kDigamma[] = {
    {0.0001, -10000.577051183513856},
    {0.0001778279410038923, -5623.9901750911599042},
    {0.00031622776601683794, -3162.8543557796270727},
    {0.0005623413251903491, -1778.8557010693526845},
    {0.001, -1000.5755719318102797},
    {0.001778279410038923, -562.91561949803030404},
    {0.0031622776601683794, -316.79979192993375359},
    {0.005623413251903491, -178.39594434570462338},
    {0.01, -100.56088545786867242},
    {0.01778279410038923, -56.782470799450242367},
    {0.03162277660168379, -32.149143720636328291},
    {0.05623413251903491, -18.27112692274915385},
    {0.1, -10.423754940411076232},
    {0.1778279410038923, -5.9409228117675669568},
    {0.31622776601683794, -3.3132182611533207957},
    {0.5623413251903491, -1.6850683648890479003},
    {1.0, -0.57721566490153286061},
    {1.7782794100389228, 0.26885909695499732143},
    {3.1622776601683795, 0.98492505162720073923},
    {5.623413251903491, 1.6353978296521636014},
    {10.0, 2.2517525890667211076},
    {17.78279410038923, 2.8498508600529527293},
    {31.622776601683793, 3.4379829261862625102},
    {56.23413251903491, 4.0206061642087584867},
    {100.0, 4.6001618527380874002},
    {177.82794100389228, 5.1780021173876007639},
    {316.22776601683796, 5.754880760322530105},
    {562.341325190349, 6.3312196025055510819},
    {1000.0, 6.9072551956488120521},
    {1778.2794100389228, 7.4831203552157403152},
    {3162.2776601683795, 8.0588897032628182776},
    {5623.413251903491, 8.6346051821219380416},
    {10000.0, 9.2102903711428494036},
    {17782.794100389227, 9.7859585278949114171},
    {31622.776601683792, 10.361617107001571369},
    {56234.13251903491, 10.937270300298314506},
    {100000.0, 11.512920464961895087},
    {177827.94100389228, 12.088568926509478656},
    {316227.7660168379, 12.664216430327587765},
    {562341.3251903491, 13.239863395575794234},
    {1000000.0, 13.815510057964190771},
    {-0.5, 0.036489973978576520559},
    {-1.5, 0.70315664064524318723},
    {-2.25, 4.1585835646579722748},
    {-3.7, -0.84507685887041935462},
    {-10.1, 12.03005224854830926},
    {-0.001, 999.42113819789133376},
    {-25.5, 3.2581581591584295705},
    {-100.3, 6.895643124860435035},
};

inline constexpr OraclePoint kPolygamma1[] = {
    {0.01, 10001.621213528312804},
    {0.01778279410038923, 3163.8808463302278488},
    {0.03162277660168379, 1001.5720300227664583},
    {0.05623413251903491, 317.74708474393858427},
    {0.1, 101.4332991507927477},
    {0.1778279410038923, 32.923741509532482998},
    {0.31622776601683794, 11.115116349969193528},
    {0.5623413251903491, 4.0480161293519534372},
    {1.0, 1.6449340668482264365},
    {1.7782794100389228, 0.7485257549282000454},
    {3.1622776601683795, 0.37139947793255579994},
    {5.623413251903491, 0.19457076559842280146},
    {10.0, 0.10516633568168574612},
    {17.78279410038923, 0.057844890636729443854},
    {31.622776601683793, 0.032128046011110059558},
    {56.23413251903491, 0.017941845159677033673},
    {100.0, 0.010050166663333571395},
    {177.82794100389228, 0.0056392542780070572201},
    {316.22776601683796, 0.0031672829306206051486},
    {562.341325190349, 0.0017798614861039563472},
    {1000.0, 0.0010005001666666333334},
    {1778.2794100389228, 0.00056249946871134578205},
    {3162.2776601683795, 0.00031627777128730057814},
    {5623.413251903491, 0.00017784375332942864957},
    {10000.0, 0.00010000500016666666633},
};

inline constexpr OraclePoint kPolygamma2[] = {
    {0.01, -2000002.3403986769596},
    {0.01778279410038923, -355658.17446460066568},
    {0.03162277660168379, -63247.763789458575527},
    {0.05623413251903491, -11248.90144741048523},
    {0.1, -2001.8614573783436732},
    {0.1778279410038923, -357.20845387168818368},
    {0.31622776601683794, -64.405946287373306995},
    {0.5623413251903491, -11.994106864122210872},
    {1.0, -2.4041138063191885708},
    {1.7782794100389228, -0.53990812873644987358},
    {3.1622776601683795, -0.13647038843395631321},
    {5.623413251903491, -0.037741077314411559172},
    {10.0, -0.011049834970802067462},
    {17.78279410038923, -0.0033451003472821259217},
    {31.622776601683793, -0.0010321226101013846736},
    {56.23413251903491, -0.00032190117399994437435},
    {100.0, -0.000101004999833349997},
    {177.82794100389228, -0.000031801104537417390377},
    {316.22776601683796, -0.000010031672776435017017},
    {562.341325190349, -3.1679060734150128427e-6},
    {1000.0, -1.0010004999998333335e-6},
    {1778.2794100389228, -3.1640564395783654359e-7},
    {3162.2776601683795, -1.0003162777660150663e-7},
    {5623.413251903491, -3.1628400514935688515e-8},
    {10000.0, -1.0001000049999999833e-8},
};

inline constexpr OraclePoint kPolygamma3[] = {
    {0.01, 600000006.25106182292},
    {0.01778279410038923, 60000006.07003482527},
    {0.03162277660168379, 6000005.7643814292671},
    {0.05623413251903491, 600005.26792556932063},
    {0.1, 60004.512876790253384},
    {0.1778279410038923, 6003.4819835521940443},
    {0.31622776601683794, 602.2919555360425521},
    {0.5623413251903491, 61.212461074220215916},
    {1.0, 6.4939394022668291491},
    {1.7782794100389228, 0.75502008779867905755},
    {3.1622776601683795, 0.09928878248424027457},
    {5.623413251903491, 0.014597080765806610526},
    {10.0, 0.0023199013042898683856},
    {17.78279410038923, 0.00038677879382384544508},
    {31.622776601683793, 0.000066308767175863505963},
    {56.23413251903491, 0.000011550382500522669578},
    {100.0, 2.0301999900013330334e-6},
    {177.82794100389228, 3.5866712865646793858e-7},
    {316.22776601683796, 6.3546185655737367936e-8},
    {562.341325190349, 1.1276862069338950979e-8},
    {1000.0, 2.0030019999990000013e-9},
    {1778.2794100389228, 3.5595599447603179624e-10},
    {3162.2776601683795, 6.3275559527922580788e-11},
    {5623.413251903491, 1.1249826859462856378e-11},
    {10000.0, 2.0003000199999999e-12},
};

inline constexpr OraclePoint kPolygamma4[] = {
    {0.01, -240000000023.70090315},
    {0.01778279410038923, -13496191827.393907759},
    {0.03162277660168379, -758946659.80405867051},
    {0.05623413251903491, -42678724.875290122523},
    {0.1, -2400015.6072031951988},
    {0.1778279410038923, -134973.10062877780742},
    {0.31622776601683794, -7595.9881533040698247},
    {0.5623413251903491, -429.64545882764580656},
    {1.0, -24.886266123440878232},
    {1.7782794100389228, -1.5429207343450219191},
    {3.1622776601683795, -0.10734308505828330223},
    {5.623413251903491, -0.0084435130706460179007},
    {10.0, -0.0007299311682352866345},
    {17.78279410038923, -0.00006706362743043854455},
    {31.622776601683793, -6.3894663311873354547e-6},
    {56.23413251903491, -6.2165551072439827865e-7},
    {100.0, -6.1209999300119967013e-8},
    {177.82794100389228, -6.0677971797892385064e-9},
    {316.22776601683796, -6.0380473312220304128e-10},
    {562.341325190349, -6.0213709756270709082e-11},
    {1000.0, -6.012009999993000012e-12},
    {1778.2794100389228, -6.0067512581792439237e-13},
    {3162.2776601683795, -6.003795733192130795e-14},
    {5623.413251903491, -6.0021342515198045759e-15},
    {10000.0, -6.0012000999999993e-16},
};

inline constexpr double kEulerGamma = 0.57721566490153286061;
inline constexpr double kLnSqrtPi = 0.57236494292470008707;
inline constexpr double kLnGammaMinus1p5 = 0.86004701537648101451;
inline constexpr double kDigammaHalf = -1.9635100260214234794;
inline constexpr double kZeta3 = 1.2020569031595942854;
inline constexpr double kHalfSqrtPi = 0.88622692545275801365;
inline constexpr double kGammaP3K2Xm1 = -1.0233267079464884885;
inline constexpr double kTwoLn2 = 1.3862943611198906188;
inline constexpr double kEMinus1 = 1.7182818284590452354;
inline constexpr double kHalfGamma1p5 = 0.44311346272637900682;
inline constexpr double kPi4Over90 = 1.0823232337111381915;
inline constexpr double kPi2Over24 = 0.41123351671205660912;
inline constexpr double kPi2Over6 = 1.6449340668482264365;

}  // namespace pkgamma::oracle
