// Reference values from 50-digit mpmath (half-integer-order Bessel for the
// spherical kinds). Columns: order, x, j_l, n_l, J_m, N_m.
pub const TABLE: &[(usize, f64, f64, f64, f64, f64)] = &[
    (0, 1e-4, 9.9999999833333333417e-1, -9.9999999500000000417e+3, 9.9999999750000000156e-1, -5.9372890697093370167),
    (0, 0.01, 9.9998333341666646825e-1, -9.9995000041666527778e+1, 9.9997500015624956597e-1, -3.0054556370836459578),
    (0, 0.3, 9.8506735553779858368e-1, -3.1844549637520200655, 9.7762624653829608757e-1, -8.0727357780451946575e-1),
    (0, 0.5, 9.5885107720840600055e-1, -1.7551651237807454322, 9.3846980724081290423e-1, -4.4451873350670655715e-1),
    (0, 0.9, 8.7036323291942598718e-1, -6.9067774252296050721e-1, 8.075237981225447773e-1, 5.6283066352055390319e-3),
    (0, 2.0, 4.546487134128408477e-1, 2.080734182735711935e-1, 2.2389077914123566805e-1, 5.103756726497451196e-1),
    (0, 5.0, -1.9178485493262769378e-1, -5.6732437092645252893e-2, -1.7759677131433830435e-1, -3.0851762524903378007e-1),
    (0, 10.0, -5.440211108893698134e-2, 8.3907152907645245226e-2, -2.459357644513483352e-1, 5.5671167283599391424e-2),
    (0, 24.9, -9.2628797561202528505e-3, -3.9077823254136534504e-2, 8.3245968353015681694e-2, -1.3649918399676511316e-1),
    (0, 25.1, -1.3041983797150095385e-3, -3.9819285013979897053e-2, 1.0827567149994928907e-1, -1.1676770763803710441e-1),
    (0, 37.0, -1.7392922523162147586e-2, -2.0686866268793063689e-2, 1.0862369724899694741e-2, -1.3071487908859495809e-1),
    (0, 50.0, -5.2474970740785757183e-3, -1.9299320569842265481e-2, 5.5812327669251815005e-2, -9.8064995470077079029e-2),
    (1, 1e-4, 3.3333333300000000012e-5, -1.0000000049999999875e+8, 4.9999999937500000026e-5, -6.3661980364557616263e+3),
    (1, 0.01, 3.3333000001190473986e-3, -1.0000499987500069444e+4, 4.9999375002604161241e-3, -6.3678596282060656374e+1),
    (1, 0.3, 9.910288804064188014e-2, -1.1599917234711198802e+1, 1.4831881627310400774e-1, -2.2931051383885290472),
    (1, 0.5, 1.6253703063606656886e-1, -4.469181324769896865, 2.4226845767487388638e-1, -1.4714723926702430692),
    (1, 0.9, 2.7639251627640170077e-1, -1.6377829468338265507, 4.059495460788056746e-1, -8.7312658245632881702e-1),
    (1, 2.0, 4.3539777497999161735e-1, -3.5061200427605525095e-1, 5.767248077568733872e-1, -1.0703243154093754689e-1),
    (1, 5.0, -9.5089408079170791649e-2, 1.804383675140986432e-1, -3.2757913759146522204e-1, 1.478631433912268448e-1),
    (1, 10.0, 7.8466941798751547092e-2, 6.2792826379701505863e-2, 4.347274616886143667e-2, 2.4901542420695388392e-1),
    (1, 24.9, -3.9449826457193572771e-2, 7.6934892639862554809e-3, -1.3485569953140874334e-1, -8.6002557595554441547e-2),
    (1, 25.1, -3.9871245108789259983e-2, -2.8222731805311385008e-4, -1.1463478413442272782e-1, -1.1062223322783082844e-1),
    (1, 37.0, -2.1156945255905554164e-2, 1.6833818029410983703e-2, -1.3058003873375645503e-1, -1.2629455885387862256e-2),
    (1, 50.0, -1.9404270511323836996e-2, 4.8615106626817304087e-3, -9.7511828125175137661e-2, -5.6795668562014767942e-2),
    (2, 1e-4, 6.6666666619047619061e-10, -3.0000000050000000125e+12, 1.2499999989583333337e-9, -1.2732395479182616282e+8),
    (2, 0.01, 6.6666190477513225509e-6, -3.0000500012499791668e+6, 1.2499895833658853624e-5, -1.2732713800775047629e+4),
    (2, 0.3, 5.9615248686202177187e-3, -1.1281471738335996795e+2, 1.116586194906396404e-2, -1.4480094011452340849e+1),
    (2, 0.5, 1.6371106607993412617e-2, -2.5059922824838635758e+1, 3.0604023458682641307e-2, -5.4413708371742657196),
    (2, 0.9, 5.094515466857968206e-2, -4.7685987469231279953, 9.4586304274801166264e-2, -1.9459096009826029102),
    (2, 2.0, 1.9844794905714657832e-1, -7.3399142468765406992e-1, 3.5283402861563771915e-1, -6.1740810419068266648e-1),
    (2, 5.0, 1.3473121008512521879e-1, 1.6499545760110443881e-1, 4.6565116277752215532e-2, 3.6766288260552451799e-1),
    (2, 10.0, 7.7942193628562445468e-2, -6.5069304993734793467e-2, 2.5463031368512062253e-1, -5.8680824422086146398e-3),
    (2, 24.9, 4.5098886166993404685e-3, 4.0004749671484276128e-2, -9.4077751447907950235e-2, 1.2959134804531495721e-1),
    (2, 25.1, -3.4612890834868940451e-3, 3.9785552665208608545e-2, -1.1740991724771205623e-1, 1.0795318706211432923e-1),
    (2, 37.0, 1.5677494529440075627e-2, 2.2051770433339900205e-2, -1.7920750196994638256e-2, 1.3003220579749291148e-1),
    (2, 50.0, 4.0832408433991454985e-3, 1.9591011209603169306e-2, -5.9712800794258820511e-2, 9.5793168727596488312e-2),
    (3, 1e-4, 9.5238095185185185197e-15, -1.5000000015000000013e+17, 2.0833333320312500003e-14, -5.0929581853068484762e+12),
    (3, 0.01, 9.5237566138768637227e-9, -1.5000150001250020833e+9, 2.0833203125325520381e-8, -5.0930218417137369909e+6),
    (3, 0.3, 2.5585976969508183757e-4, -1.8686453724879549338e+3, 5.5934304774884612053e-4, -1.9077481501430934894e+2),
    (3, 0.5, 1.174035443867557309e-3, -2.4613004692361646071e+2, 2.5637299945872440754e-3, -4.2059494304723882688e+1),
    (3, 0.9, 6.6361207712631995612e-3, -2.4854432313850217867e+1, 1.4434028475866175458e-2, -7.7753605330219063394),
    (3, 2.0, 6.0722097662874828461e-2, -1.4843665574430799239, 1.289432494744020511e-1, -1.1277837768404277861),
    (3, 5.0, 2.2982061816429601044e-1, -1.5442909912994204387e-2, 3.6483123061366699446e-1, 1.4626716269319276959e-1),
    (3, 10.0, -3.9495844984470324358e-2, -9.5327478876568902597e-2, 5.8379379305186812343e-2, -2.5136265718383732978e-1),
    (3, 24.9, 4.03554265810287817e-2, 3.3959299936400076971e-4, 1.1974280773254802844e-1, 1.068204448317496154e-1),
    (3, 25.1, 3.9181745291361591846e-2, 8.2076362155050279028e-3, 9.5924040349926782602e-2, 1.278259283771717574e-1),
    (3, 37.0, 2.32755255977217806e-2, -1.385384905193261881e-2, 1.28642660334081359e-1, 2.6686991647278987822e-2),
    (3, 50.0, 1.9812594595663751546e-2, -2.9024095417214134781e-3, 9.2734804061634432021e-2, 6.4459122060222487007e-2),
    (5, 1e-4, 9.6200096163096163102e-25, -9.4500000052500000019e+26, 2.6041666655815972224e-24, -2.4446199274193998117e+22),
    (5, 0.01, 9.6199726200342866405e-15, -9.450052500187500625e+14, 2.6041558159915984421e-14, -2.4446352048297114219e+12),
    (5, 0.3, 2.3295825567290277341e-7, -1.3027986738475796997e+6, 6.3044326337710722806e-7, -1.0116965735231194766e+5),
    (5, 0.5, 2.9774668754574455816e-6, -6.1327563166980636195e+4, 8.053627241357474086e-6, -7.9463014788074733418e+3),
    (5, 0.9, 5.5059196744390155388e-5, -1.8605820935163798919e+3, 1.4865802167459598322e-4, -4.3568977089657903605e+2),
    (5, 2.0, 2.635169770244117349e-3, -1.8591445311190985562e+1, 7.0396297558716854842e-3, -9.935989128481974981),
    (5, 5.0, 1.0681116145650454205e-1, -3.2046504674973918053e-1, 2.6114054612017009005e-1, -4.5369482249110188076e-1),
    (5, 10.0, -5.5534511621452180909e-2, 9.3833541678691808081e-2, -2.3406152818679364044e-1, 1.354030476893623032e-1),
    (5, 24.9, -3.7884940886277905024e-2, -1.4764634599369959112e-2, -8.0246762733942249418e-2, -1.4018638276614221864e-1),
    (5, 25.1, -3.4022533283114945521e-2, -2.1652621637155173e-2, -5.1194170474627872338e-2, -1.524943549100336373e-1),
    (5, 37.0, -2.6017853987529722898e-2, 7.8523647242672121238e-3, -1.2025742311395987021e-1, -5.3866361491682574661e-2),
    (5, 50.0, -2.0048300563664871196e-2, -6.9711319645853661664e-4, -8.1400247696569639644e-2, -7.8548413913081653386e-2),
    (8, 1e-4, 2.9019636855137371134e-40, -2.0270250006756750001e+42, 9.6881200369913952274e-40, -4.1069614769645127163e+37),
    (8, 0.01, 2.9019560495399602907e-24, -2.0270317567629937697e+24, 9.688093128271624289e-24, -4.1069761432478539095e+21),
    (8, 0.3, 1.8994737804750253622e-12, -1.0329302516423567724e+11, 6.340502484263521178e-12, -6.27981590009794078e+9),
    (8, 0.5, 1.1261439602121288724e-10, -1.0465271780488363122e+9, 3.758223154797609955e-10, -1.0608185751587979022e+8),
    (8, 0.9, 1.2228277888064615206e-8, -5.3756005061695368901e+6, 4.0775278664203593798e-8, -9.8214270748765040086e+5),
    (8, 2.0, 6.6832043238470203026e-6, -4.5301158146337609411e+3, 2.2179552287925904088e-5, -1.8539221751598764179e+3),
    (8, 5.0, 5.7414346745477912596e-3, -2.5637763450676655895, 1.840521665480200092e-2, -2.8208693825455951774),
    (8, 10.0, 1.2557802364956783121e-1, -4.1117327754934506244e-2, 3.1785412684385722501e-1, 1.075473733962914293e-3),
    (8, 24.9, 3.8980139436816903516e-2, -1.3991891457725657823e-2, 1.5823529655508555224e-1, 4.4152700259547696004e-2),
    (8, 25.1, 4.0562419322868707371e-2, -6.3987485844322408117e-3, 1.4642830151431089496e-1, 7.2852067395478036731e-2),
    (8, 37.0, 7.5128908459744001169e-3, -2.6343740415260987993e-2, 1.0803878960519720306e-1, -7.7124691160409140104e-2),
    (8, 50.0, 8.8737491082275087322e-3, -1.8087018959192311599e-2, 1.0405856317363927063e-1, -4.5493023506881563788e-2),
    (12, 1e-4, 1.2648855555148789735e-61, -3.1623414329374655288e+63, 5.0968644980110688526e-61, -5.2043415829335419967e+58),
    (12, 0.01, 1.2648832133704775373e-37, -3.1623483069134716206e+37, 5.0968546973374885218e-37, -5.2043534098145716001e+34),
    (12, 0.3, 6.7109256004440144005e-20, -1.987386029291194437e+18, 2.7039984267648426088e-19, -9.8129403109316515194e+16),
    (12, 0.5, 3.0738335149913967795e-17, -2.6047113900498007332e+15, 1.2383825594799326896e-16, -2.1438481716552876449e+14),
    (12, 0.9, 3.5191968106276034694e-14, -1.2662221986608777853e+12, 1.4172434574136606578e-13, -1.8769730017054162272e+11),
    (12, 2.0, 4.8101489009407473834e-10, -4.2125190034141691388e+7, 1.9326951487239854848e-9, -1.3920956977541260613e+7),
    (12, 5.0, 1.928786347449460147e-5, -4.5296856921444623944e+2, 7.6278131660845513551e-5, -3.8298214155827064906e+2),
    (12, 10.0, 1.7215999744992806055e-2, -4.0196424849784976283e-1, 6.337025497015601509e-2, -7.8490973265203171216e-1),
    (12, 24.9, 7.4840380079250238583e-3, 4.2510186040152489161e-2, -5.925189476841014972e-2, 1.6013654211646075439e-1),
    (12, 25.1, 3.8547396952922710157e-5, 4.2763719770948530918e-2, -8.58700513391581494e-2, 1.4656135399172765595e-1),
    (12, 37.0, 2.7575505938350857433e-2, -3.9413913265505688583e-3, 1.1993837614474258522e-1, 6.1649339718028859491e-2),
    (12, 50.0, 1.9597110412012989237e-2, -5.3888956048043778576e-3, 1.0577531055851069217e-1, 4.38902186745555218e-2),
    (20, 1e-4, 7.6259790040054008366e-106, -3.1983098681388174348e+107, 3.9199043491581357307e-105, -4.0601741501185077145e+102),
    (20, 0.01, 7.6259701374796213736e-66, -3.1983139681288145671e+65, 3.9198996830746452875e-65, -4.0601794919223915778e+62),
    (20, 0.3, 2.656233165006981548e-36, -3.0610844664868312584e+34, 1.365322468857201139e-35, -1.1658263859888768402e+33),
    (20, 0.5, 7.2515880810153971263e-32, -6.7288761838234723021e+29, 3.7272019617047144607e-31, -4.2714301215659064361e+28),
    (20, 0.9, 9.1844782376117309077e-27, -2.9535143667197923981e+24, 4.7199445947241876556e-26, -3.3753942743059801832e+23),
    (20, 2.0, 7.6326411008876086676e-20, -1.6054364928152228968e+17, 3.9189728050907538391e-19, -4.0816513889983666253e+16),
    (20, 5.0, 5.4277267607932083501e-12, -9.2679514030575434126e+8, 2.7703300521289416874e-11, -5.9339652969143206921e+8),
    (20, 10.0, 2.3083719613194687167e-6, -1.2112106053526033011e+3, 1.1513369247813397783e-5, -1.597483848269625981e+3),
    (20, 24.9, 3.1243251932528953585e-2, 4.263662754078402197e-2, 6.422099357756943503e-2, 1.9556675860860550738e-1),
    (20, 25.1, 2.5685692002369457445e-2, 4.5272404238336077005e-2, 3.9629272494917333863e-2, 1.9979353826068922149e-1),
    (20, 37.0, -2.7022272274344685916e-2, -1.2112712502572884997e-2, -8.6897293168974734768e-2, -1.1352865452127307408e-1),
    (20, 50.0, -1.5785029898269297655e-2, 1.3759531302541216098e-2, -1.1670435275957973734e-1, 1.644263394811577765e-2),
    (40, 1e-4, 1.5475053292726485817e-221, -7.9777941819340909225e+222, 1.1146925672198022573e-220, -7.1389613500943803106e+217),
    (40, 0.01, 1.5475043971340198562e-141, -7.9777992306676302925e+140, 1.1146918875973837955e-140, -7.1389659258955353393e+137),
    (40, 0.3, 1.8803854400488010864e-82, -2.1885615703666533439e+80, 1.3544624208790590931e-81, -5.875372393506886393e+78),
    (40, 0.5, 1.4053298053951285017e-73, -1.757113594971616605e+71, 1.0122626959003594127e-72, -7.8619604848825331211e+69),
    (40, 0.9, 2.2762148977936135128e-63, -6.0279068908191637693e+60, 1.6394960160542205108e-62, -4.8550062998970497611e+59),
    (40, 2.0, 1.6609787786381113935e-49, -3.7209293216267697007e+46, 1.1960774581136800271e-48, -6.6615412355271833569e+45),
    (40, 5.0, 1.210347583370466103e-33, -2.0557587160679081526e+30, 8.7022416173888180768e-33, -9.2168165716493142326e+29),
    (40, 10.0, 8.435671634459208707e-22, -1.5103049188350186013e+18, 6.0308953123469066317e-21, -1.3628032972693373954e+18),
    (40, 24.9, 2.1601612400306247362e-7, -2.9118159359306226399e+3, 1.4755652248990822917e-6, -6.895021198980766488e+3),
    (40, 25.1, 2.7827095818214640194e-7, -2.2535020451225764595e+3, 1.8988933788997428616e-6, -5.3855913516042663311e+3),
    (40, 37.0, 7.0152122238028063237e-3, -1.2157697573069166344e-1, 4.3223140838079572843e-2, -5.0177463711631702598e-1),
    (40, 50.0, -2.606336952186383051e-2, 4.9787972207317208949e-5, -1.3817628120116143097e-1, -4.5308011195609007933e-2),
];
