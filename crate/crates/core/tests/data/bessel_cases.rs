// (order, argument, J_order(argument)) at 40-digit precision; |J| < 1e-300 stored as 0.
pub const BESSEL_CASES: &[(i64, f64, f64)] = &[
    (0, 0.001, 0.999999750000015625),
    (0, 0.05, 0.99937509764946858081),
    (0, 0.3, 0.97762624653829608922),
    (0, 0.5, 0.93846980724081290423),
    (0, 0.8, 0.84628735275048024971),
    (0, 0.9, 0.80752379812254476829),
    (0, 0.95, 0.78678706861310984736),
    (0, 0.99, 0.76958188096516852709),
    (0, 0.999, 0.7656375745159794729),
    (0, 1.0, 0.76519768655796655145),
    (0, 1.001, 0.76475747345287201644),
    (0, 1.01, 0.76078097763218856476),
    (0, 1.05, 0.74279555643386005094),
    (0, 1.2, 0.6711327442643626956),
    (0, 1.5, 0.51182767173591812875),
    (0, 2.0, 0.22389077914123566805),
    (0, 2.5, -0.048383776468197996327),
    (0, 5.0, -0.17759677131433830435),
    (0, 7.3, 0.28821694763501439904),
    (0, 10.0, -0.2459357644513483352),
    (0, 20.0, 0.16702466434058315473),
    (0, 33.3, 0.063338485947521251681),
    (0, 100.0, 0.019985850304223122424),
    (0, 1000.0, 0.024786686152420174561),
    (0, 12345.6, -0.00052905008073917817065),
    (1, 0.001, 0.00049999993750000261457),
    (1, 0.05, 0.024992188313759700519),
    (1, 0.3, 0.14831881627310400238),
    (1, 0.5, 0.24226845767487388638),
    (1, 0.8, 0.36884204609417001131),
    (1, 0.9, 0.40594954607880568252),
    (1, 0.95, 0.42339165401956011183),
    (1, 0.99, 0.43678289579482477657),
    (1, 0.999, 0.43972527610888244178),
    (1, 1.0, 0.44005058574493351596),
    (1, 1.001, 0.44037557023390615218),
    (1, 1.01, 0.44328576120907169946),
    (1, 1.05, 0.45589678977773104618),
    (1, 1.2, 0.49828905756721546885),
    (1, 1.5, 0.55793650791009964199),
    (1, 2.0, 0.5767248077568733872),
    (1, 2.5, 0.49709410246427403801),
    (1, 5.0, -0.32757913759146522204),
    (1, 7.3, 0.082570430493257831051),
    (1, 10.0, 0.04347274616886143667),
    (1, 20.0, 0.066833124175850045579),
    (1, 33.3, 0.12386214790148009055),
    (1, 100.0, -0.077145352014112158033),
    (1, 1000.0, 0.0047283119070895239176),
    (1, 12345.6, -0.0071614903850201077317),
    (2, 0.002, 4.9999983333335418748e-7),
    (2, 0.1, 0.001248958658799918984),
    (2, 0.5, 0.030604023458682641307),
    (2, 0.6, 0.04366509671584168673),
    (2, 1.0, 0.11490348493190048047),
    (2, 1.6, 0.25696775143771977129),
    (2, 1.8, 0.30614353532540297559),
    (2, 1.9, 0.3299257276923872166),
    (2, 1.98, 0.34833414573347682486),
    (2, 1.998, 0.35238602348782087661),
    (2, 2.0, 0.35283402861563771915),
    (2, 2.002, 0.35328158596201618742),
    (2, 2.02, 0.35728913454153456483),
    (2, 2.1, 0.37462362515090366222),
    (2, 2.4, 0.43098004018769870099),
    (2, 2.5, 0.44605905843961722674),
    (2, 3.0, 0.48609126058589107691),
    (2, 4.0, 0.36412814585207280421),
    (2, 7.3, -0.26559491188343691053),
    (2, 10.0, 0.25463031368512062253),
    (2, 33.3, -0.055899317905390314677),
    (2, 40.0, -0.0010649746823580395933),
    (2, 100.0, -0.021528757344505365585),
    (2, 1000.0, -0.024777229528605995513),
    (2, 12345.6, 0.00052788991187172416152),
    (3, 0.003, 5.6249968359382122653e-10),
    (3, 0.15000000000000002, 0.000070213678647783940718),
    (3, 0.5, 0.0025637299945872440754),
    (3, 0.8999999999999999, 0.01443402847586617133),
    (3, 1.0, 0.019563353982668405919),
    (3, 1.5, 0.060963951141139630644),
    (3, 2.4000000000000004, 0.19811479879756688998),
    (3, 2.5, 0.21660039103911352477),
    (3, 2.7, 0.25404529158722738323),
    (3, 2.8499999999999996, 0.28193823452668417563),
    (3, 2.9699999999999998, 0.30372606192804850467),
    (3, 2.997, 0.30853137184760928534),
    (3, 3.0, 0.30906272225525164362),
    (3, 3.0029999999999997, 0.30959354157727450812),
    (3, 3.0300000000000002, 0.31434627397676227147),
    (3, 3.1500000000000004, 0.33485946892325855472),
    (3, 3.5999999999999996, 0.39876267371058799272),
    (3, 4.5, 0.42470397297745560025),
    (3, 6.0, 0.11476838482077529636),
    (3, 7.3, -0.22810188905952463488),
    (3, 10.0, 0.058379379305186812343),
    (3, 15.0, -0.19401825782012263456),
    (3, 33.3, -0.13057678068290835715),
    (3, 60.0, -0.040396711521655156971),
    (3, 100.0, 0.076284201720331943409),
    (3, 1000.0, -0.0048274208252039478996),
    (3, 12345.6, 0.0071616614224461936973),
    (5, 0.005, 8.138012356232083879e-16),
    (5, 0.25, 2.5365161587472414865e-7),
    (5, 0.5, 8.053627241357474086e-6),
    (5, 1.0, 0.00024975773021123443138),
    (5, 1.5, 0.0017994217673606111588),
    (5, 2.5, 0.019501625134503219886),
    (5, 4.0, 0.13208665604709827229),
    (5, 4.5, 0.19471465863871366786),
    (5, 4.75, 0.22804452118769436455),
    (5, 4.95, 0.25460538464971573631),
    (5, 4.995, 0.26048976377759484877),
    (5, 5.0, 0.26114054612017009005),
    (5, 5.004999999999999, 0.26179067800228014643),
    (5, 5.05, 0.26761064775190656473),
    (5, 5.25, 0.29260174978197472234),
    (5, 6.0, 0.36208707488717238908),
    (5, 7.3, 0.31370617089730907746),
    (5, 7.5, 0.28347390516255045867),
    (5, 10.0, -0.23406152818679364044),
    (5, 25.0, -0.066007995398422993392),
    (5, 33.3, 0.1383538305410695624),
    (5, 100.0, -0.074195736964513920834),
    (5, 1000.0, 0.0050254069452331860742),
    (5, 12345.6, -0.0071620012418617876845),
    (10, 0.01, 2.6911383392363449813e-30),
    (10, 0.5, 2.6131773608228030862e-13),
    (10, 1.0, 2.630615123687453207e-10),
    (10, 2.5, 2.2247284173983832948e-6),
    (10, 3.0, 0.000012928351645715883778),
    (10, 5.0, 0.0014678026473104741311),
    (10, 7.3, 0.032111623954048501212),
    (10, 8.0, 0.060767026774251156317),
    (10, 9.0, 0.12469409282831672203),
    (10, 9.5, 0.16502640472619115732),
    (10, 9.9, 0.19901352409053375661),
    (10, 9.99, 0.20664199562675015891),
    (10, 10.0, 0.2074861066333588577),
    (10, 10.009999999999998, 0.2083293739294685148),
    (10, 10.1, 0.21587417253047770134),
    (10, 10.5, 0.24774553753592743271),
    (10, 12.0, 0.30047603527126931073),
    (10, 15.0, -0.090071811047659053964),
    (10, 20.0, 0.18648255802394508321),
    (10, 33.3, 0.12182178268240793059),
    (10, 50.0, -0.11384784914946938567),
    (10, 100.0, -0.054732176935472014742),
    (10, 200.0, 0.0015301688136801641061),
    (10, 1000.0, -0.024520622306036558192),
    (10, 12345.6, 0.00050004176676183231052),
    (20, 0.02, 4.110298050415587071e-59),
    (20, 0.5, 3.7272019617047144607e-31),
    (20, 1.0, 3.8735030085246577189e-25),
    (20, 2.5, 3.3090793836587766837e-17),
    (20, 6.0, 9.2963984090066681352e-10),
    (20, 7.3, 3.8026628466865908758e-8),
    (20, 10.0, 0.000011513369247813397783),
    (20, 16.0, 0.017328746227591996192),
    (20, 18.0, 0.06730594743740596909),
    (20, 19.0, 0.11164834708850506713),
    (20, 19.8, 0.15389192719147299232),
    (20, 19.98, 0.16366497159417472857),
    (20, 20.0, 0.16474777377532653234),
    (20, 20.019999999999996, 0.16582949357297144887),
    (20, 20.2, 0.17549438395134256934),
    (20, 21.0, 0.21452596327168664925),
    (20, 24.0, 0.16191265166449528941),
    (20, 30.0, 0.0048310199934040645386),
    (20, 33.3, 0.081350630072802146345),
    (20, 40.0, 0.12779393355084889625),
    (20, 100.0, 0.062217458498338753141),
    (20, 400.0, -0.02969012162821544576),
    (20, 1000.0, 0.023357967932679334591),
    (20, 12345.6, -0.00041296944040854992802),
    (29, 0.029, 5.4091646470017595381e-85),
    (29, 0.5, 3.9157650041759129557e-49),
    (29, 1.0, 2.0891599817181681732e-40),
    (29, 1.4500000000000002, 9.9003834893251467577e-36),
    (29, 2.5, 6.9376599620841607302e-29),
    (29, 7.3, 1.4644807628117864651e-15),
    (29, 8.7, 1.9627074856297265999e-13),
    (29, 10.0, 9.04976698677581419e-12),
    (29, 14.5, 1.6561199801000087573e-7),
    (29, 23.200000000000003, 0.0062762775006005761672),
    (29, 26.1, 0.042922220578243138091),
    (29, 27.549999999999997, 0.086559854846134605907),
    (29, 28.71, 0.13321647632766833581),
    (29, 28.971, 0.14433689574795944693),
    (29, 29.0, 0.14557062688730625469),
    (29, 29.028999999999996, 0.14680312460713599208),
    (29, 29.29, 0.1577988191136924561),
    (29, 30.450000000000003, 0.19990738258003954273),
    (29, 33.3, 0.15647568221927154754),
    (29, 34.8, 0.024095462663188638143),
    (29, 43.5, 0.0809541310519320623),
    (29, 58.0, 0.10980931007628171229),
    (29, 100.0, 0.018134272984234763802),
    (29, 145.0, 0.033921813845044557655),
    (29, 580.0, 0.031512820280983919912),
    (29, 1000.0, 0.014427075632671958359),
    (29, 12345.6, -0.0071753414717758608087),
    (30, 0.03, 7.2289387429030431181e-88),
    (30, 0.5, 3.2633568289139784981e-51),
    (30, 1.0, 3.4828697942514829022e-42),
    (30, 1.5, 6.6114276165910748403e-37),
    (30, 2.5, 2.8955641962077116122e-30),
    (30, 7.3, 1.8080428309801663402e-16),
    (30, 9.0, 7.6921564693355001859e-14),
    (30, 10.0, 1.5510960782574670069e-12),
    (30, 15.0, 1.037471020107871819e-7),
    (30, 24.0, 0.0056256808426951404187),
    (30, 27.0, 0.04095922662421921912),
    (30, 28.5, 0.084392733158600312897),
    (30, 29.7, 0.13143649556010114069),
    (30, 29.97, 0.14268744221191223234),
    (30, 30.0, 0.14393585001030721029),
    (30, 30.029999999999998, 0.14518300969359091404),
    (30, 30.3, 0.15630754036341156755),
    (30, 31.5, 0.19862747519844460136),
    (30, 33.3, 0.20358675395222248571),
    (30, 36.0, 0.009797122625557038723),
    (30, 45.0, 0.045799309554040956079),
    (30, 60.0, 0.068198567826733512898),
    (30, 100.0, 0.081460129581172222968),
    (30, 150.0, -0.0094074649928818192567),
    (30, 600.0, 0.032490555125765188508),
    (30, 1000.0, -0.020271896981075845238),
    (30, 12345.6, 0.00026771951935187355183),
    (31, 0.031, 9.6662408907561403193e-91),
    (31, 0.5, 2.631905208612420681e-53),
    (31, 1.0, 5.6189483272156813177e-44),
    (31, 1.55, 4.4175063778306049295e-38),
    (31, 2.5, 1.1694108814347139012e-31),
    (31, 7.3, 2.1581837993829741076e-17),
    (31, 9.299999999999999, 3.0163284560924518743e-14),
    (31, 10.0, 2.5680948276898785146e-13),
    (31, 15.5, 6.5027389254044918926e-8),
    (31, 24.8, 0.0050451349598327675528),
    (31, 27.900000000000002, 0.039104895399651591229),
    (31, 29.45, 0.082316529809383174037),
    (31, 30.69, 0.12973090843827978827),
    (31, 30.969, 0.14110935309330300888),
    (31, 31.0, 0.14237210781851476082),
    (31, 31.030999999999995, 0.14363360006132934599),
    (31, 31.31, 0.15488395827961529335),
    (31, 32.550000000000004, 0.19739283353041852556),
    (31, 33.3, 0.21034729787482305263),
    (31, 37.199999999999996, -0.004089074739052618011),
    (31, 46.5, 0.0083687508423059480921),
    (31, 62.0, -0.002295313141944628754),
    (31, 100.0, 0.030741804764468569979),
    (31, 155.0, -0.015675903628099010019),
    (31, 620.0, 0.028514335338815665348),
    (31, 1000.0, -0.015643389451536509073),
    (31, 12345.6, 0.0071766425969671121382),
    (45, 0.045, 5.8938173690579529771e-131),
    (45, 0.5, 6.7437031760232165391e-84),
    (45, 1.0, 2.3630771536244629518e-70),
    (45, 2.25, 1.6296680451660462379e-54),
    (45, 2.5, 1.8551607101524053396e-52),
    (45, 7.3, 1.2565974420927961738e-31),
    (45, 10.0, 1.3753810394958548358e-25),
    (45, 13.5, 6.397813596381307248e-20),
    (45, 22.5, 9.7989787175751355436e-11),
    (45, 33.3, 0.00011575791464993337119),
    (45, 36.0, 0.0011434796026263794795),
    (45, 40.5, 0.021233299863733304222),
    (45, 42.75, 0.060149900795168962707),
    (45, 44.55, 0.11139378047581462004),
    (45, 44.955, 0.12431044473258964557),
    (45, 45.0, 0.12574728300344975391),
    (45, 45.044999999999995, 0.12718268426976539787),
    (45, 45.45, 0.13994918264520465015),
    (45, 47.25, 0.18308178064298135809),
    (45, 54.0, -0.13100035171706252105),
    (45, 67.5, 0.070426069725787372114),
    (45, 90.0, 0.016657037403039593035),
    (45, 100.0, 0.035643815815597157834),
    (45, 225.0, 0.030656139450271789608),
    (45, 900.0, 0.025624347006342781075),
    (45, 1000.0, 0.023534746080077132952),
    (45, 12345.6, -0.0071807621608647050702),
    (50, 0.05, 2.5937029673520467957e-145),
    (50, 0.5, 2.5905580660785431235e-95),
    (50, 1.0, 2.9060049481732393945e-80),
    (50, 2.5, 2.2341702499526218344e-60),
    (50, 7.3, 3.2948277320896556697e-37),
    (50, 10.0, 1.7845136078715953063e-30),
    (50, 15.0, 6.1060519495338755717e-22),
    (50, 25.0, 9.7561594280229815309e-12),
    (50, 33.3, 1.209247939189086727e-6),
    (50, 40.0, 0.00068185243531768311415),
    (50, 45.0, 0.017284343240791224451),
    (50, 47.5, 0.054390025191915086379),
    (50, 49.5, 0.10653691484070380291),
    (50, 49.95, 0.11991907137065691586),
    (50, 50.0, 0.12140902189761506382),
    (50, 50.05, 0.12289748207908929524),
    (50, 50.5, 0.13612183539890771361),
    (50, 52.5, 0.17869675514311855569),
    (50, 60.0, -0.13798273148535212047),
    (50, 75.0, 0.094076799581573464796),
    (50, 100.0, -0.038698339728525383467),
    (50, 250.0, 0.049542213934894948841),
    (50, 1000.0, -0.0033360489606152764062),
    (50, 12345.6, -0.00019752631794266719243),
    (75, 0.075, 4.5470038259258536601e-217),
    (75, 0.5, 2.8218360299672842483e-155),
    (75, 1.0, 1.0634326016371706734e-132),
    (75, 2.5, 7.3233418527678174366e-103),
    (75, 3.75, 1.1491797118139827109e-89),
    (75, 7.3, 5.0250001979890810679e-68),
    (75, 10.0, 7.6731147423014976449e-58),
    (75, 22.5, 5.13506528270999382e-32),
    (75, 33.3, 3.8655081641961890688e-20),
    (75, 37.5, 1.0134267294387341205e-16),
    (75, 60.0, 0.000054474954602784025956),
    (75, 67.5, 0.0065270204436054617079),
    (75, 71.25, 0.034600185458418822913),
    (75, 74.25, 0.089048231583039075211),
    (75, 74.925, 0.10435173984665694016),
    (75, 75.0, 0.10606380967296280815),
    (75, 75.07499999999999, 0.10777416527638867515),
    (75, 75.75, 0.12288027075518014202),
    (75, 78.75, 0.15786409297604829647),
    (75, 90.0, 0.034830468257763938334),
    (75, 100.0, 0.014834000156084130336),
    (75, 112.5, 0.036859974390855582329),
    (75, 150.0, 0.066632623330918861743),
    (75, 375.0, 0.041598178882857221041),
    (75, 1000.0, -0.0035198364347700025204),
    (75, 1500.0, 0.011492547556481947147),
    (75, 12345.6, 0.0070959839149117718238),
    (100, 0.1, 8.4525165351217890536e-289),
    (100, 0.5, 6.6638999042770851533e-219),
    (100, 1.0, 8.4318287896267085492e-189),
    (100, 2.5, 5.1793883053015715678e-149),
    (100, 5.0, 6.2677893955418761175e-119),
    (100, 7.3, 1.5920608556596069105e-102),
    (100, 10.0, 6.5973160641553809722e-89),
    (100, 30.0, 4.5788015281752445296e-42),
    (100, 33.3, 9.1778287304231815634e-38),
    (100, 50.0, 1.115927369083809278e-21),
    (100, 80.0, 4.6065530648234773541e-6),
    (100, 90.0, 0.0026021305819963289288),
    (100, 95.0, 0.023150768009427965996),
    (100, 99.0, 0.077687161700459400794),
    (100, 99.9, 0.09447832199419531011),
    (100, 100.0, 0.096366673295861559674),
    (100, 100.1, 0.098253131221827170419),
    (100, 101.0, 0.11480132142789914919),
    (100, 105.0, 0.13583502780364088937),
    (100, 120.0, 0.075737179130010701447),
    (100, 150.0, -0.015359526118405390629),
    (100, 200.0, 0.0093332141865575864571),
    (100, 500.0, 0.034329532854951521455),
    (100, 1000.0, 0.011676135007802554492),
    (100, 2000.0, -0.015487871720056099595),
    (100, 12345.6, 0.0023355728610385282383),
    (200, 0.2, 0.0),
    (200, 0.5, 0.0),
    (200, 1.0, 0.0),
    (200, 2.5, 0.0),
    (200, 7.3, 3.4110965565136446254e-263),
    (200, 10.0, 6.9675301553935444557e-236),
    (200, 33.3, 6.0940948018000613814e-132),
    (200, 60.0, 3.6353516029560498905e-82),
    (200, 100.0, 2.0594424939411678724e-41),
    (200, 160.0, 2.9448088981343426446e-10),
    (200, 180.0, 0.000081543700011565725383),
    (200, 190.0, 0.0056825328022411433352),
    (200, 198.0, 0.053364930467556756821),
    (200, 199.8, 0.074100050112283405315),
    (200, 200.0, 0.076487608930953319678),
    (200, 200.2, 0.078872750592641062124),
    (200, 202.0, 0.099078996501325833794),
    (200, 210.0, 0.031620020933562850916),
    (200, 240.0, -0.039155334280501758606),
    (200, 300.0, -0.019369872600834378946),
    (200, 400.0, -0.01958998386955328339),
    (200, 1000.0, 0.0041835315250220756455),
    (200, 4000.0, -0.003193711484813742515),
    (200, 12345.6, 0.0071793015899718531096),
    (500, 0.5, 0.0),
    (500, 1.0, 0.0),
    (500, 2.5, 0.0),
    (500, 7.3, 0.0),
    (500, 10.0, 0.0),
    (500, 25.0, 0.0),
    (500, 33.3, 0.0),
    (500, 100.0, 1.6616492023458118515e-287),
    (500, 150.0, 3.2504242494865876199e-202),
    (500, 250.0, 2.3107877099306269088e-100),
    (500, 400.0, 1.3647281100289630658e-22),
    (500, 450.0, 4.3937153374586971478e-9),
    (500, 475.0, 0.00014346671072502773158),
    (500, 495.0, 0.027131354732573097476),
    (500, 499.5, 0.0531102941688939275),
    (500, 500.0, 0.056357003281836941079),
    (500, 500.49999999999994, 0.059600201489229353056),
    (500, 505.0, 0.082798837558786095963),
    (500, 525.0, -0.021907321653166690488),
    (500, 600.0, 0.041398528403868443834),
    (500, 750.0, 0.029059486609735707954),
    (500, 1000.0, -0.019033209321675450179),
    (500, 2500.0, -0.00030931724020411109336),
    (500, 10000.0, -0.0068535834177446547657),
    (500, 12345.6, -0.004220355948690239012),
    (1000, 0.5, 0.0),
    (1000, 1.0, 0.0),
    (1000, 2.5, 0.0),
    (1000, 7.3, 0.0),
    (1000, 10.0, 0.0),
    (1000, 33.3, 0.0),
    (1000, 50.0, 0.0),
    (1000, 100.0, 0.0),
    (1000, 300.0, 0.0),
    (1000, 500.0, 1.9704922060099743071e-198),
    (1000, 800.0, 5.7306149153241744571e-43),
    (1000, 900.0, 5.0841100850412997894e-16),
    (1000, 950.0, 4.6392213664653561916e-7),
    (1000, 990.0, 0.012361942456230178547),
    (1000, 999.0, 0.040643307875358620786),
    (1000, 1000.0, 0.044730672947964040881),
    (1000, 1000.9999999999999, 0.048812603750262719728),
    (1000, 1010.0, 0.065281818002215058833),
    (1000, 1050.0, -0.044378177326737437191),
    (1000, 1200.0, 0.0035826674378828883711),
    (1000, 1500.0, 0.022929733509152397528),
    (1000, 2000.0, 0.013364551284220438738),
    (1000, 5000.0, -0.0083633820160955580013),
    (1000, 12345.6, 0.0027479134495585864157),
    (1000, 20000.0, 0.005406836736416744797),
    (3000, 0.5, 0.0),
    (3000, 1.0, 0.0),
    (3000, 2.5, 0.0),
    (3000, 3.0, 0.0),
    (3000, 7.3, 0.0),
    (3000, 10.0, 0.0),
    (3000, 33.3, 0.0),
    (3000, 100.0, 0.0),
    (3000, 150.0, 0.0),
    (3000, 900.0, 0.0),
    (3000, 1000.0, 0.0),
    (3000, 1500.0, 0.0),
    (3000, 2400.0, 4.1043555087487752349e-124),
    (3000, 2700.0, 2.0901570781776415166e-43),
    (3000, 2850.0, 1.149677423378746011e-16),
    (3000, 2970.0, 0.0011078990275123971056),
    (3000, 2997.0, 0.025176601486321047757),
    (3000, 3000.0, 0.031014547810126577726),
    (3000, 3002.9999999999995, 0.036829114694750686753),
    (3000, 3030.0, -0.016282237941287503981),
    (3000, 3150.0, 0.0076557599987414109969),
    (3000, 3600.0, 0.016830297873623424403),
    (3000, 4500.0, 0.010266121198136659946),
    (3000, 6000.0, 0.0074923769434374884029),
    (3000, 12345.6, 0.0070472796641022524883),
    (3000, 15000.0, 0.0051563354800952523781),
    (10000, 0.5, 0.0),
    (10000, 1.0, 0.0),
    (10000, 2.5, 0.0),
    (10000, 7.3, 0.0),
    (10000, 10.0, 0.0),
    (10000, 33.3, 0.0),
    (10000, 100.0, 0.0),
    (10000, 500.0, 0.0),
    (10000, 1000.0, 0.0),
    (10000, 3000.0, 0.0),
    (10000, 5000.0, 0.0),
    (10000, 8000.0, 0.0),
    (10000, 9000.0, 1.0979632825537532737e-138),
    (10000, 9500.0, 1.0186739405874726676e-49),
    (10000, 9900.0, 8.1291352247658391979e-7),
    (10000, 9990.0, 0.012459424680946999834),
    (10000, 10000.0, 0.020762165277200784504),
    (10000, 10009.999999999998, 0.028771752055640164443),
    (10000, 10100.0, -0.014270673708196834282),
    (10000, 10500.0, -0.003185764237487135275),
    (10000, 12000.0, -0.0091522201827134628227),
    (10000, 12345.6, 0.0025749780212382233978),
    (10000, 15000.0, -0.0032561467577251297952),
    (10000, 20000.0, 0.0036495100485577519142),
];

// Large-order transition-zone values (mpmath, 30 digits).
pub const BESSEL_LARGE_ORDER: &[(i64, f64, f64)] = &[
    (100000, 99900.0, 0.00029613824361671940249),
    (100000, 100000.0, 0.009636944011337862271),
    (100000, 100100.0, -0.0067290337390449468143),
    (100000, 105000.0, 0.0044480997899034089087),
];
