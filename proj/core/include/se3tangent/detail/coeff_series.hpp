// Auto-generated even Taylor coefficients (phi^0..phi^60) for the scalar
// coefficient families. Exact rational series coefficients rounded to double.
#pragma once

namespace se3tan::detail {

inline constexpr int kSeriesTerms = 31;

inline constexpr double kSeries_alpha[kSeriesTerms] = {
    +1.00000000000000000e+00, -1.66666666666666657e-01, +8.33333333333333322e-03, -1.98412698412698413e-04,
    +2.75573192239858925e-06, -2.50521083854417202e-08, +1.60590438368216133e-10, -7.64716373181981641e-13,
    +2.81145725434552060e-15, -8.22063524662432950e-18, +1.95729410633912626e-20, -3.86817017063068413e-23,
    +6.44695028438447359e-26, -9.18368986379554601e-29, +1.13099628864477159e-31, -1.21612504155351789e-34,
    +1.15163356207719509e-37, -9.67759295863189067e-41, +7.26546017915307136e-44, -4.90246975651354352e-47,
    +2.98931082714240461e-50, -1.65521086774219515e-53, +8.35965084718280449e-57, -3.86662851396059404e-60,
    +1.64397470831657907e-63, -6.44695964045717240e-67, +2.33924515256065764e-70, -7.87624630491803921e-74,
    +2.46749570956078931e-77, -7.21068296189593649e-81, +1.97013195680216823e-84,
};

inline constexpr double kSeries_beta[kSeriesTerms] = {
    +1.00000000000000000e+00, -8.33333333333333287e-02, +2.77777777777777788e-03, -4.96031746031746031e-05,
    +5.51146384479717766e-07, -4.17535139757362004e-09, +2.29414911954594490e-11, -9.55895466477477051e-14,
    +3.12384139371724505e-16, -8.22063524662432969e-19, +1.77935827849011482e-21, -3.22347514219223677e-24,
    +4.95919252644959518e-27, -6.55977847413967552e-30, +7.53997525763181077e-33, -7.60078150970948684e-36,
    +6.77431507104232359e-39, -5.37644053257327267e-42, +3.82392641008056391e-45, -2.45123487825677170e-48,
    +1.42348134625828780e-51, -7.52368576246452313e-55, +3.63463080312295798e-58, -1.61109521415024729e-61,
    +6.57589883326631603e-65, -2.47959986171429723e-68, +8.66387093540984363e-72, -2.81294510889929958e-75,
    +8.50860589503720444e-79, -2.40356098729864520e-82, +6.35526437678118841e-86,
};

inline constexpr double kSeries_gamma[kSeriesTerms] = {
    +1.00000000000000000e+00, -8.33333333333333287e-02, -1.38888888888888894e-03, -3.30687830687830710e-05,
    -8.26719576719576754e-07, -2.08767569878681002e-08, -5.28419013868749322e-10, -1.33825365306846789e-11,
    -3.38968029632258272e-13, -8.58606205627784517e-15, -2.17486869855806192e-16, -5.50900282836022953e-18,
    -1.39544646858125223e-19, -3.53470703962946728e-21, -8.95351742703754628e-23, -2.26795245233768293e-24,
    -5.74479066887220246e-26, -1.45517247561486496e-27, -3.68599494066531029e-29, -9.33673425709504507e-31,
    -2.36502241570062995e-32, -5.99067176248213414e-34, -1.51745488446829032e-35, -3.84375812545418860e-37,
    -9.73635307264669126e-39, -2.46624704420068111e-40, -6.24707674182074342e-42, -1.58240302446449140e-43,
    -4.00827368594893575e-45, -1.01530758555695573e-46, -2.57180415824187168e-48,
};

inline constexpr double kSeries_delta[kSeriesTerms] = {
    +1.66666666666666657e-01, -8.33333333333333322e-03, +1.98412698412698413e-04, -2.75573192239858925e-06,
    +2.50521083854417202e-08, -1.60590438368216133e-10, +7.64716373181981641e-13, -2.81145725434552060e-15,
    +8.22063524662432950e-18, -1.95729410633912626e-20, +3.86817017063068413e-23, -6.44695028438447359e-26,
    +9.18368986379554601e-29, -1.13099628864477159e-31, +1.21612504155351789e-34, -1.15163356207719509e-37,
    +9.67759295863189067e-41, -7.26546017915307136e-44, +4.90246975651354352e-47, -2.98931082714240461e-50,
    +1.65521086774219515e-53, -8.35965084718280449e-57, +3.86662851396059404e-60, -1.64397470831657907e-63,
    +6.44695964045717240e-67, -2.33924515256065764e-70, +7.87624630491803921e-74, -2.46749570956078931e-77,
    +7.21068296189593649e-81, -1.97013195680216823e-84, +5.04386061649300675e-88,
};

inline constexpr double kSeries_a1[kSeriesTerms] = {
    +5.00000000000000000e-01, +0.00000000000000000e+00, -1.38888888888888894e-03, +4.96031746031746031e-05,
    -8.26719576719576754e-07, +8.35070279514724007e-09, -5.73537279886486209e-11, +2.86768639943243103e-13,
    -1.09334448780103594e-15, +3.28825409864973188e-18, -8.00711225320551611e-21, +1.61173757109611839e-23,
    -2.72755588954727742e-26, +3.93586708448380559e-29, -4.90098391746067714e-32, +5.32054705679664132e-35,
    -5.08073630328174230e-38, +4.30115242605861813e-41, -3.25033744856847948e-44, +2.20611139043109468e-47,
    -1.35230727894537353e-50, +7.52368576246452371e-54, -3.81636234327910645e-57, +1.77220473556527222e-60,
    -7.56228365825626309e-64, +2.97551983405715684e-67, -1.08298386692623048e-70, +3.65682864156908974e-74,
    -1.14866179583002268e-77, +3.36498538221810369e-81, -9.21513334633272281e-85,
};

inline constexpr double kSeries_a2[kSeriesTerms] = {
    +1.66666666666666657e-01, +0.00000000000000000e+00, -1.98412698412698413e-04, +5.51146384479717850e-06,
    -7.51563251563251607e-08, +6.42361753472864534e-10, -3.82358186590990790e-12, +1.68687435260731252e-14,
    -5.75444467263703049e-17, +1.56583528507130101e-19, -3.48135315356761560e-22, +6.44695028438447336e-25,
    -1.01020588501751005e-27, +1.35719554637372599e-30, -1.58096255401957335e-33, +1.61228698690807287e-36,
    -1.45163894379478358e-39, +1.16247362866449142e-42, -8.33419858607302418e-46, +5.38075948885632821e-49,
    -3.14490064871017101e-52, +1.67193016943656090e-55, -8.11991987931724738e-59, +3.61674435829647386e-62,
    -1.48280071730514980e-65, +5.61418836614557808e-69, -1.96906157622950980e-72, +6.41548884485805259e-76,
    -1.94688439971190284e-79, +5.51636947904607104e-83, -1.46271957878297182e-86,
};

inline constexpr double kSeries_a3[kSeriesTerms] = {
    +4.16666666666666644e-02, -2.77777777777777788e-03, +7.44047619047619115e-05, -1.10229276895943553e-06,
    +1.04383784939340501e-08, -6.88244735863783503e-11, +3.34563413267116961e-13, -1.24953655748689802e-15,
    +3.69928586098094850e-18, -8.89679139245057295e-21, +1.77291132820573008e-23, -2.97551551586975682e-26,
    +4.26385600819078902e-29, -5.27798268034226836e-32, +5.70058613228211486e-35, -5.41945205683385887e-38,
    +4.56997445268728199e-41, -3.44153376907250733e-44, +2.32867313434393322e-47, -1.42348134625828780e-50,
    +7.89987005058775030e-54, -3.99809388343525434e-57, +1.85275949627278448e-60, -7.89107859991957923e-64,
    +3.09949982714287152e-67, -1.12630322160327965e-70, +3.79747589701405507e-74, -1.19120482530520857e-77,
    +3.48516343158303574e-81, -9.53289656517178198e-85, +2.44311998611380007e-88,
};

inline constexpr double kSeries_a4[kSeriesTerms] = {
    +8.33333333333333322e-03, -3.96825396825396825e-04, +8.26719576719576775e-06, -1.00208433541766881e-07,
    +8.02952191841080745e-10, -4.58829823909188964e-12, +1.96802007804186450e-14, -6.57650819729946360e-17,
    +1.76156469570521357e-19, -3.86817017063068389e-22, +7.09164531282292060e-25, -1.10204278365546548e-27,
    +1.47029517523820322e-30, -1.70257505817492522e-33, +1.72745034311579268e-36, -1.54841487338110251e-39,
    +1.23512823045602218e-42, -8.82444556172437872e-46, +5.67969057157056863e-49, -3.31042173548439048e-52,
    +1.75552667790838885e-55, -8.50658273071330712e-59, +3.78114182912813160e-62, -1.54727031370972148e-65,
    +5.84811288140164387e-69, -2.04782403927869019e-72, +6.66223841581413064e-76, -2.01899122933086203e-79,
    +5.71338267472628841e-83, -1.51315818494790194e-86, +3.75864613248276914e-90,
};

inline constexpr double kSeries_b2[kSeriesTerms] = {
    +8.33333333333333287e-02, +0.00000000000000000e+00, -3.30687830687830710e-05, -1.65343915343915351e-06,
    -6.26302709636042939e-08, -2.11367605547499729e-09, -6.69126826534233911e-11, -2.03380817779354963e-12,
    -6.01024343939449130e-14, -1.73989495884644954e-15, -4.95810254552420665e-17, -1.39544646858125242e-18,
    -3.88817774359241446e-20, -1.07442209124450565e-21, -2.94833818803898807e-23, -8.04270693642108322e-25,
    -2.18275871342229747e-26, -5.89759190506449646e-28, -1.58724482370615768e-29, -4.25704034826113354e-31,
    -1.13822763487160552e-32, -3.03490976893658031e-34, -8.07189206345379573e-36, -2.14199767598227205e-37,
    -5.67236820166156606e-39, -1.49929841803697852e-40, -3.95600756116122881e-42, -1.04215115834672328e-43,
    -2.74133048100378011e-45, -7.20105164307724072e-47, -1.88919225021780632e-48,
};

inline constexpr double kSeries_b4[kSeriesTerms] = {
    -1.38888888888888894e-03, -6.61375661375661420e-05, -2.48015873015873016e-06, -8.35070279514724007e-08,
    -2.64209506934374671e-09, -8.02952191841080667e-11, -2.37277620742580810e-12, -6.86884964502227614e-14,
    -1.95738182870225551e-15, -5.50900282836022968e-17, -1.53499111543937755e-18, -4.24164844755536074e-20,
    -1.16395726551488104e-21, -3.17513343327275647e-23, -8.61718600330830312e-25, -2.32827596098378393e-26,
    -6.26619139913102709e-28, -1.68061216627710815e-29, -4.49354258983119656e-31, -1.19813435249642683e-32,
    -3.18665525738340969e-34, -8.45626787599921425e-36, -2.23936120670873913e-37, -5.91899290608163466e-39,
    -1.56176918545518587e-40, -4.11424786360767745e-42, -1.08223389520621271e-43, -2.84286123955947588e-45,
    -7.45823205890142764e-47, -1.95433681057014460e-48, -5.11540607113792262e-50,
};

inline constexpr double kSeries_abar1[kSeriesTerms] = {
    +0.00000000000000000e+00, -5.55555555555555577e-03, +2.97619047619047646e-04, -6.61375661375661403e-06,
    +8.35070279514724007e-08, -6.88244735863783451e-10, +4.01476095920540334e-12, -1.74935118048165751e-14,
    +5.91885737756951761e-17, -1.60142245064110316e-19, +3.54582265641146039e-22, -6.54613413491346489e-25,
    +1.02332544196578950e-27, -1.37227549688898958e-30, +1.59616411703899216e-33, -1.62583561705015754e-36,
    +1.46239182485993024e-39, -1.17012148148465249e-42, +8.38322328363815979e-46, -5.40922911578149411e-49,
    +3.15994802023509975e-52, -1.67919943104280679e-55, +8.15214178360025206e-59, -3.62989615596300672e-62,
    +1.48775991702857822e-65, -5.63151610801639845e-69, +1.97468746644730838e-72, -6.43250605664812703e-76,
    +1.95169152168650016e-79, -5.52908000779963350e-83, +1.46587199166827993e-86,
};

inline constexpr double kSeries_abar2[kSeriesTerms] = {
    +0.00000000000000000e+00, -7.93650793650793650e-04, +3.30687830687830710e-05, -6.01250601250601285e-07,
    +6.42361753472864596e-09, -4.58829823909188980e-11, +2.36162409365023752e-13, -9.20711147621924879e-16,
    +2.81850351312834172e-18, -6.96270630713523100e-21, +1.41832906256458412e-23, -2.42449412404202412e-26,
    +3.52870842057168744e-29, -4.42669515125480551e-32, +4.83686096072421909e-35, -4.64524462014330746e-38,
    +3.95241033745927098e-41, -3.00031149098628852e-44, +2.04468860576540480e-47, -1.25796025948406823e-50,
    +7.02210671163355570e-54, -3.57276474689958899e-57, +1.66370240481637790e-60, -7.11744344306471868e-64,
    +2.80709418307278939e-67, -1.02391201963934517e-70, +3.46436397622334818e-74, -1.09025526383866545e-77,
    +3.19949429784672145e-81, -8.77631747269783108e-85, +2.25518767948966152e-88,
};

inline constexpr double kSeries_abar3[kSeriesTerms] = {
    -5.55555555555555577e-03, +2.97619047619047646e-04, -6.61375661375661403e-06, +8.35070279514724007e-08,
    -6.88244735863783451e-10, +4.01476095920540334e-12, -1.74935118048165751e-14, +5.91885737756951761e-17,
    -1.60142245064110316e-19, +3.54582265641146039e-22, -6.54613413491346489e-25, +1.02332544196578950e-27,
    -1.37227549688898958e-30, +1.59616411703899216e-33, -1.62583561705015754e-36, +1.46239182485993024e-39,
    -1.17012148148465249e-42, +8.38322328363815979e-46, -5.40922911578149411e-49, +3.15994802023509975e-52,
    -1.67919943104280679e-55, +8.15214178360025206e-59, -3.62989615596300672e-62, +1.48775991702857822e-65,
    -5.63151610801639845e-69, +1.97468746644730838e-72, -6.43250605664812703e-76, +1.95169152168650016e-79,
    -5.52908000779963350e-83, +1.46587199166827993e-86, -3.64474776483177605e-90,
};

inline constexpr double kSeries_abar4[kSeriesTerms] = {
    -7.93650793650793650e-04, +3.30687830687830710e-05, -6.01250601250601285e-07, +6.42361753472864596e-09,
    -4.58829823909188980e-11, +2.36162409365023752e-13, -9.20711147621924879e-16, +2.81850351312834172e-18,
    -6.96270630713523100e-21, +1.41832906256458412e-23, -2.42449412404202412e-26, +3.52870842057168744e-29,
    -4.42669515125480551e-32, +4.83686096072421909e-35, -4.64524462014330746e-38, +3.95241033745927098e-41,
    -3.00031149098628852e-44, +2.04468860576540480e-47, -1.25796025948406823e-50, +7.02210671163355570e-54,
    -3.57276474689958899e-57, +1.66370240481637790e-60, -7.11744344306471868e-64, +2.80709418307278939e-67,
    -1.02391201963934517e-70, +3.46436397622334818e-74, -1.09025526383866545e-77, +3.19949429784672145e-81,
    -8.77631747269783108e-85, +2.25518767948966152e-88, -5.43992203706235222e-92,
};

inline constexpr double kSeries_bbar2[kSeriesTerms] = {
    +0.00000000000000000e+00, -1.32275132275132284e-04, -9.92063492063492063e-06, -5.01042167708834352e-07,
    -2.11367605547499737e-08, -8.02952191841080745e-10, -2.84733144891096956e-11, -9.61638950303118608e-13,
    -3.13181092592360881e-14, -9.91620509104841306e-16, -3.06998223087875487e-17, -9.33162658462179326e-19,
    -2.79349743723571480e-20, -8.25534692650916588e-22, -2.41281208092632502e-23, -6.98482788295135191e-25,
    -2.00518124772192867e-26, -5.71408136534216708e-28, -1.61767533233923080e-29, -4.55291053948642176e-31,
    -1.27466210295336384e-32, -3.55163250791967001e-34, -9.85318930951845068e-36, -2.72273673679755160e-37,
    -7.49649209018489217e-39, -2.05712393180383901e-40, -5.62761625507230640e-42, -1.53514506936211684e-43,
    -4.17660995298479948e-45, -1.13351535013068380e-46, -3.06924364268275338e-48,
};

inline constexpr double kSeries_bbar4[kSeriesTerms] = {
    -1.32275132275132284e-04, -9.92063492063492063e-06, -5.01042167708834352e-07, -2.11367605547499737e-08,
    -8.02952191841080745e-10, -2.84733144891096956e-11, -9.61638950303118608e-13, -3.13181092592360881e-14,
    -9.91620509104841306e-16, -3.06998223087875487e-17, -9.33162658462179326e-19, -2.79349743723571480e-20,
    -8.25534692650916588e-22, -2.41281208092632502e-23, -6.98482788295135191e-25, -2.00518124772192867e-26,
    -5.71408136534216708e-28, -1.61767533233923080e-29, -4.55291053948642176e-31, -1.27466210295336384e-32,
    -3.55163250791967001e-34, -9.85318930951845068e-36, -2.72273673679755160e-37, -7.49649209018489217e-39,
    -2.05712393180383901e-40, -5.62761625507230640e-42, -1.53514506936211684e-43, -4.17660995298479948e-45,
    -1.13351535013068380e-46, -3.06924364268275338e-48, -8.29278396702232013e-50,
};

inline constexpr double kSeries_abreve1[kSeriesTerms] = {
    -1.11111111111111115e-02, +1.19047619047619058e-03, -3.96825396825396825e-05, +6.68056223611779206e-07,
    -6.88244735863783472e-09, +4.81771315104648465e-11, -2.44909165267432032e-13, +9.47017180411122817e-16,
    -2.88256041115398588e-18, +7.09164531282292097e-21, -1.44014950968096250e-23, +2.45598106071789451e-26,
    -3.56791629191137304e-29, +4.46925952770917860e-32, -4.87750685115047274e-35, +4.67965383955177676e-38,
    -3.97841303704781841e-41, +3.01796038210973715e-44, -2.05550706399696778e-47, +1.26397920809403996e-50,
    -7.05263761037978780e-54, +3.58694238478411070e-57, -1.66975223174298300e-60, +7.14124760173717649e-64,
    -2.81575805400819925e-67, +1.02683748255260037e-70, -3.47355327058998823e-74, +1.09294725214443995e-77,
    -3.20686640452378747e-81, +8.79523195000967960e-85, -2.25974361419570137e-88,
};

inline constexpr double kSeries_abreve2[kSeriesTerms] = {
    -1.58730158730158730e-03, +1.32275132275132284e-04, -3.60750360750360750e-06, +5.13889402778291677e-08,
    -4.58829823909188967e-10, +2.83394891238028483e-12, -1.28899560667069483e-14, +4.50960562100534675e-17,
    -1.25328713528434152e-19, +2.83665812512916812e-22, -5.33388707289245352e-25, +8.46890020937205121e-28,
    -1.15094073932624934e-30, +1.35432106900278139e-33, -1.39357338604299234e-36, +1.26477130798696671e-39,
    -1.02010590693533816e-42, +7.36087898075545620e-46, -4.78024898603945959e-49, +2.80884268465342200e-52,
    -1.50056119369782735e-55, +7.32029058119206322e-59, -3.27402398380977076e-62, +1.34740520787493880e-65,
    -5.11956009819672577e-69, +1.80146926763614099e-72, -5.88737842472879396e-76, +1.79171680679416401e-79,
    -5.09026413416474228e-83, +1.35311260769379696e-86, -3.37275166297865877e-90,
};

inline constexpr double kSeries_abreve3[kSeriesTerms] = {
    +5.95238095238095292e-04, -2.64550264550264561e-05, +5.01042167708834352e-07, -5.50595788691026761e-09,
    +4.01476095920540334e-11, -2.09922141657798888e-13, +8.28640032859732391e-16, -2.56227592102576506e-18,
    +6.38248078154062842e-21, -1.30922682698269313e-23, +2.25131597232473668e-26, -3.29346119253357498e-29,
    +4.15002670430137989e-32, -4.55233972774044137e-35, +4.38717547457979084e-38, -3.74438874075088797e-41,
    +2.85029591643697414e-44, -1.94732248168133773e-47, +1.20078024768933795e-50, -6.71679772417122658e-54,
    +3.42389954911210597e-57, -1.59715430862372292e-60, +6.84369561833145996e-64, -2.70312773184787109e-67,
    +9.87343733223654257e-71, -3.34490314945702600e-74, +1.05391342171071010e-77, -3.09628480436779482e-81,
    +8.50205755167602361e-85, -2.18684865889906578e-88, +5.27992433008993043e-92,
};

inline constexpr double kSeries_abreve4[kSeriesTerms] = {
    +6.61375661375661420e-05, -2.40500240500240514e-06, +3.85417052083718757e-08, -3.67063859127351184e-10,
    +2.36162409365023742e-12, -1.10485337714630985e-14, +3.94590491837967840e-17, -1.11403300914163696e-19,
    +2.55299231261625159e-22, -4.84898824808404824e-25, +7.76315852525771316e-28, -1.06240683630115332e-30,
    +1.25758384978829694e-33, -1.30066849364012613e-36, +1.18572310123778130e-39, -9.60099677115612325e-43,
    +6.95194125960237616e-46, -4.52865693414264609e-49, +2.66840055042075105e-52, -1.42910589875983550e-55,
    +6.98755010022878786e-59, -3.13167511494847611e-62, +1.29126332421348316e-65, -4.91477769426885629e-69,
    +1.73218198811167418e-72, -5.66932737196106048e-76, +1.72772692083722944e-79, -4.91473778471078550e-83,
    +1.30800885410400366e-86, -3.26395322223741168e-90, +7.65206424650714548e-94,
};

inline constexpr double kSeries_bbreve2[kSeriesTerms] = {
    -2.64550264550264568e-04, -3.96825396825396825e-05, -3.00625300625300611e-06, -1.69094084437999790e-07,
    -8.02952191841080662e-09, -3.41679773869316360e-10, -1.34629453042436597e-11, -5.01089748147777410e-13,
    -1.78491691638871427e-14, -6.13996446175750998e-16, -2.05295784861679475e-17, -6.70439384936571551e-19,
    -2.14639020089238330e-20, -6.75587382659371006e-22, -2.09544836488540550e-23, -6.41657999271017174e-25,
    -1.94278766421633684e-26, -5.82363119642123120e-28, -1.73010600500484044e-29, -5.09864841181345559e-31,
    -1.49168565332626149e-32, -4.33540329618811857e-34, -1.25245889892687382e-35, -3.59831620328874845e-37,
    -1.02856196590191946e-38, -2.92636045263759925e-40, -8.28978337455543123e-42, -2.33890157367148786e-43,
    -6.57438903075796566e-45, -1.84154618560965227e-46, -5.14152605955383858e-48,
};

inline constexpr double kSeries_bbreve4[kSeriesTerms] = {
    -1.98412698412698413e-05, -2.00416867083533741e-06, -1.26820563328499836e-07, -6.42361753472864596e-09,
    -2.84733144891096976e-10, -1.15396674036374233e-11, -4.38453529629305272e-13, -1.58659281456774609e-14,
    -5.52596801558175938e-16, -1.86632531692435881e-17, -6.14569436191857231e-19, -1.98128326236220004e-20,
    -6.27331141040844505e-22, -1.95575180722637839e-23, -6.01554374316578607e-25, -1.82850603690949347e-26,
    -5.50009612995338532e-28, -1.63904779421511204e-29, -4.84371599122278233e-31, -1.42065300316786807e-32,
    -4.13833950999774958e-34, -1.19800416419092274e-35, -3.44838636148505042e-37, -9.87419487265842658e-39,
    -2.81380812753615291e-40, -7.98275436068300818e-42, -2.25536937461179201e-43, -6.34768596073182960e-45,
    -1.78016131275599713e-46, -4.97567038021339227e-48, -1.38638723392768971e-49,
};

}  // namespace se3tan::detail
