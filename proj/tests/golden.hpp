#pragma once

// Generated by generate_golden (100-digit oracle). Do not edit.

namespace golden {

inline constexpr double gamma_7_5 = 1.8712543057977883464760770536039504240418e+03;
inline constexpr double bessel_i_0_2 = 2.2795853023360672674372044408115333532858e+00;
inline constexpr double bessel_i_0p5_10 = 2.7787846038745710239976003231517397208145e+03;
inline constexpr double bessel_i_m0p5_1 = 1.2312002145929674465058917424545026038474e+00;
inline constexpr double bessel_i_1_0p1 = 5.0062526047092692113809064312231502112881e-02;
inline constexpr double bessel_i_3_30 = 6.7114046179743961863859202154559133835365e+11;
inline constexpr double ratio_0_10 = 1.2341412314764524014651691667763485140165e+00;
inline constexpr double tricomi_1_i_re = 9.9479302293619465371417521526884656505238e-01;
inline constexpr double tricomi_1_i_im = 1.2489150435806192047171888624409925656090e-01;
inline constexpr double tricomi_m0p5_50_30i_re = -1.9963310371490191460686906917149944204041e+02;
inline constexpr double tricomi_m0p5_50_30i_im = 3.9542401128927560113191480947979753028159e+02;
inline constexpr double fg_0_1_re = 9.8438178121308688396555565914027422223511e-01;
inline constexpr double fg_0_1_im = 2.4956604003665972141935984831034013180235e-01;
inline constexpr double fg_0p5_16_re = -1.0780713894881139591321590822342421092289e+00;
inline constexpr double fg_0p5_16_im = 2.1213895976580437805879861960802345598549e+00;
inline constexpr double fg_3p5_100_re = -1.1247159616753811384859580185776610152497e-01;
inline constexpr double fg_3p5_100_im = -3.2765844525031910130396131452104793228384e-01;
inline constexpr double kelvin_0_1_re = 9.8438178121308688396555565914027422223511e-01;
inline constexpr double kelvin_0_1_im = 2.4956604003665972141935984831034013180235e-01;
inline constexpr double kelvin_2_3_re = 8.0836846563726819090985894560215623734019e-01;
inline constexpr double kelvin_2_3_im = -8.9102236377977331571437092501165408927618e-01;
inline constexpr double kelvin_m0p5_10_re = 1.3737140935790762640406940121076979284200e+02;
inline constexpr double kelvin_m0p5_10_im = -5.6501795476200599898864259039811641894788e+01;
inline constexpr double kelvin_1_30_re = -1.0811020369317974353759529594165856885535e+08;
inline constexpr double kelvin_1_30_im = -4.6885734672072366353485457378318634507094e+07;
inline constexpr double kelvin_0_60_re = -5.0877960857843482239833898922587588779246e+16;
inline constexpr double kelvin_0_60_im = -1.2764727074061377398014167950207039283396e+17;
inline constexpr double j_0_1 = 2.4048255576957727686216318793264546431242e+00;
inline constexpr double j_2p5_1 = 5.7634591968945497914064666539527350764091e+00;
inline constexpr double j_m0p5_3 = 7.8539816339744830961566084581987572104929e+00;
inline constexpr double j_2_20 = 6.5159273190757797829068965281770225798601e+01;
inline constexpr double creep_rate_laplace_0_1 = 8.3266122352210682706847345373433773879772e+00;
inline constexpr double compliance_laplace_1_4 = 7.4769068318000997008323840937989235195731e+00;
inline constexpr double compliance_laplace_0_10i_re = 1.3129484181299746974904850792469397920882e+00;
inline constexpr double compliance_laplace_0_10i_im = -8.6204717127009091665147866962910022745324e-01;
inline constexpr double creep_rate_laplace_3p5_100_pi4_re = 1.2059602968729160769307865141804444529049e+00;
inline constexpr double creep_rate_laplace_3p5_100_pi4_im = -7.9088084301584662557254618701953197308325e-01;
inline constexpr double creep_rate_time_0_1 = 8.0000000000140510770314582846893247263826e+00;
inline constexpr double creep_rate_time_1_0p05 = 2.5115058701753430140074541844847845827639e+01;

struct QPoint {
    double nu;
    double omega;
    double q_inverse;
};

// Q^-1(omega; nu) from the f/g products.
inline constexpr QPoint q_points[] = {
    {-0.5, 1e-3, 2.5000000052910052807079262334374419847086e+03},
    {-0.5, 0.1, 2.5000529090231964386529622017611344223297e+01},
    {-0.5, 1, 2.5052807307406556342654120839957136814577e+00},
    {-0.5, 10, 2.9447970732003267878600124619859119757703e-01},
    {-0.5, 100, 7.6091032951466974196214187583520738027419e-02},
    {-0.5, 324, 4.0890021827069670659321185031078105433730e-02},
    {-0.5, 1e3, 2.2872115832914354138715477537370721693802e-02},
    {-0.5, 1e4, 7.1214238830596282254197146067788293343151e-03},
    {-0.5, 1e5, 2.2410791828957041749300483189728710997961e-03},
    {0, 1e-3, 6.0000000062499999933345734210275047774906e+03},
    {0, 0.1, 6.0000624993334656702559957837315376614267e+01},
    {0, 1, 6.0062433428919246269835899206973345432597e+00},
    {0, 10, 6.5657352517922982967945271121395615423141e-01},
    {0, 100, 1.5290304282872249842577108549763313517146e-01},
    {0, 324, 8.1887217530127136105708363394599865765413e-02},
    {0, 1e3, 4.5762612897468373646907269192106097492545e-02},
    {0, 1e4, 1.4243393431029801674500581648129378342415e-02},
    {0, 1e5, 4.4821752873455151204947771508173309337111e-03},
    {1, 1e-3, 1.6000000005555555553247630071718880131173e+04},
    {1, 0.1, 1.6000055555324764179191467335259671715572e+02},
    {1, 1, 1.6005553248801601306659791258691192185186e+01},
    {1, 10, 1.6533590251667876227112056044633529017373e+00},
    {1, 100, 3.1165381017302223466197567425163818739649e-01},
    {1, 324, 1.6463479475402352335731298237078471366867e-01},
    {1, 1e3, 9.1672427419015005260153996159940295186616e-02},
    {1, 1e4, 2.8491152602596448311420708740474981496169e-02},
    {1, 1e5, 8.9644859484044815866662326580572023244889e-03},
    {3.5, 1e-3, 5.8500000003208556149469973413313826814155e+04},
    {3.5, 0.1, 5.8500032085535232663662886747503369610100e+02},
    {3.5, 1, 5.8503208293531038567645665312479089067378e+01},
    {3.5, 10, 5.8818257046863219795253970578025594789354e+00},
    {3.5, 100, 7.7635660496794518123434917796929646762446e-01},
    {3.5, 324, 3.8109147530704550542550408109985273763388e-01},
    {3.5, 1e3, 2.0806636170869458381923230076800854495613e-01},
    {3.5, 1e4, 6.4158327145323015399252952144944883811826e-02},
    {3.5, 1e5, 2.0171743331151975701486328378689730787086e-02},
    {5, 1e-3, 9.6000000002380952380857093468705763151536e+04},
    {5, 0.1, 9.6000023809514280780593080540112600347607e+02},
    {5, 1, 9.6002380857098619997517741435898601779809e+01},
    {5, 10, 9.6237147485336060155606710961580825669216e+00},
    {5, 100, 1.1355931868590919723490598274083147877917e+00},
    {5, 324, 5.2224986452300180263056852481943358862783e-01},
    {5, 1e3, 2.7977207049381891605215543678194475391080e-01},
    {5, 1e4, 8.5613287080539776087470592164381264006832e-02},
    {5, 1e5, 2.6897790186445963516662458987456127923584e-02},
    {10, 1e-3, 2.8600000000109126984126206461038839444142e+05},
    {10, 0.1, 2.8600001091269763503254697421522447398319e+03},
    {10, 1, 2.8600109126206468995873005337310682782361e+02},
    {10, 10, 2.8610904929701452624813082176987233789370e+01},
    {10, 100, 2.9620659661550932430882920840538269020619e+00},
    {10, 324, 1.1040121033747576294517121588526922568678e+00},
    {10, 1e3, 5.3673329050100792622021333377702048008928e-01},
    {10, 1e4, 1.5764066351840825352204898783113450819400e-01},
    {10, 1e5, 4.9333719162372170524379971121142531716031e-02},
};

}  // namespace golden
