#pragma once

// Reference constants frozen from an independent high-precision oracle
// (mpmath at 30 significant digits; scripts under tests/oracle/). These were
// computed before the library was written and must not be regenerated from
// the library itself.

namespace ref {

// --- gamma / zeta / xi point values -----------------------------------------
inline constexpr double gamma_3_4i_re = 0.00522553847136921419473;
inline constexpr double gamma_3_4i_im = -0.172547079294300187719;
inline constexpr double gamma_m5p5 = 0.0109126547819098629867;
inline constexpr double gamma_half_60i_re = -2.79864796637374829717e-41;
inline constexpr double gamma_half_60i_im = -8.88472469422393419621e-42;
inline constexpr double gamma_m3p2_m4p7i_re = -5.32767577536209732626e-7;
inline constexpr double gamma_m3p2_m4p7i_im = -3.64299476008216955273e-6;
inline constexpr double gamma_25_10i_re = 5.69986895010142148018e+22;
inline constexpr double gamma_25_10i_im = 6.31040191482746164225e+22;

inline constexpr double zeta_half = -1.46035450880958681289;
inline constexpr double zeta_2 = 1.64493406684822643647;
inline constexpr double zeta_half_10i_re = 1.54489522029675276692;
inline constexpr double zeta_half_10i_im = -0.115336465271273375437;
inline constexpr double zeta_half_30i_re = -0.120642287590043699914;
inline constexpr double zeta_half_30i_im = -0.583691214763706288758;
inline constexpr double zeta_half_60i_re = 0.541200835146348111153;
inline constexpr double zeta_half_60i_im = 0.227183922368268728645;
inline constexpr double zeta_2_60i_re = 0.721086560769805951012;
inline constexpr double zeta_2_60i_im = 0.0880578170789278415178;
inline constexpr double zeta_m3_10i_re = 5.07244368697857551608;
inline constexpr double zeta_m3_10i_im = 2.63385769647447769603;
inline constexpr double zeta_0p25_5i_re = 0.668838632468093191531;
inline constexpr double zeta_0p25_5i_im = 0.260086654925214154972;

inline constexpr double xi_half = 0.497120778188314109913;
inline constexpr double xi_2 = 0.523598775598298873077;
inline constexpr double xi_0 = 0.5;
inline constexpr double xi_0p3_0p3i_re = 0.496545012195253801362;
inline constexpr double xi_0p3_0p3i_im = -0.00137683454664151069917;

inline constexpr double Xi_0p25 = 0.496403386959760517328;
inline constexpr double Xi_0p5 = 0.494256987910076300381;
inline constexpr double Xi_1 = 0.485757429670983491723;
inline constexpr double Xi_2 = 0.453099858312936111302;
inline constexpr double Xi_5 = 0.275549997344204192229;
inline constexpr double Xi_10 = 0.0379678503109356842241;
inline constexpr double Xi_20 = -3.66554277556094568322e-5;
inline constexpr double Xi_30 = -1.50166224798020742959e-8;
inline constexpr double Xi_40 = 2.11762170790722581743e-11;
inline constexpr double Xi_60 = -2.90927482393588643961e-18;

// --- theta remainder and theta factor ---------------------------------------
inline constexpr double psi_0p1 = 1.08113883008426148452;
inline constexpr double psi_0p25 = 0.500006974684712417991;
inline constexpr double psi_1 = 0.0432174056066540072877;
inline constexpr double psi_4 = 3.48734235620899563968e-6;
inline constexpr double h_0 = 0.913565188786691985425;   // = 1 - 2 psi(1)
inline constexpr double h_0p7 = 0.70467976797916060712;
inline constexpr double h_1 = 0.606530659439280440305;

// --- incomplete gamma --------------------------------------------------------
inline constexpr double igamma_1p25_pi = 0.0613653399211130546979;
inline constexpr double igamma_2p5_m1i_3_re = 0.0499327999723201708397;
inline constexpr double igamma_2p5_m1i_3_im = -0.390285538698477391648;

// --- zero heights ------------------------------------------------------------
inline constexpr double gamma_zero_1 = 14.1347251417346937905;
inline constexpr double gamma_zero_2 = 21.0220396387715549926;
inline constexpr double gamma_zero_3 = 25.0108575801456887632;

// --- cosine-transform identity: closed-form side ------------------------------
inline constexpr double rhs_0 = 1.43502484283382204841;
inline constexpr double rhs_0p5 = 1.22254861454552748085;
inline constexpr double rhs_1 = 0.952736131935708106363;
inline constexpr double rhs_2 = 0.577863674895460858955;
inline constexpr double rhs_4 = 0.21258416579381816422;
inline constexpr double rhs_20 = 7.13140429076575081043e-5;
inline constexpr double lhs_4 = 0.212584165793818164219;  // integral side, independent route

// --- Upsilon (series and integral agree at the oracle to 1e-25) --------------
inline constexpr double upsilon_1p5 = 1.03093863729504268343;
inline constexpr double upsilon_2 = 0.769936688420493249147;
inline constexpr double upsilon_2p5 = 0.613587477505027505114;
inline constexpr double upsilon_3 = 0.509538569927356502019;
inline constexpr double upsilon_4 = 0.37982682137096179874;
inline constexpr double upsilon_2_1i_re = 0.612990123182782526825;
inline constexpr double upsilon_2_1i_im = -0.312644653459507800568;

// --- Laplace transform F(s) of the theta factor -------------------------------
inline constexpr double F_0p48 = 1.00947828333638175898;
inline constexpr double F_0p52 = 0.96950883130931499779;
inline constexpr double F_1 = 0.656315920599714578784;
inline constexpr double F_1p5 = 0.490156919319703814412;
inline constexpr double F_2pi = 0.140821779095224127635;
inline constexpr double Fprime_0 = -3.9987200771442288612;  // d/ds at s=0 (= -int_0^inf y h(y) dy)

// --- Laplace chain ground truth (form (a) by quadrature) ----------------------
inline constexpr double chain_a_n1_s2 = 0.390621920256849048235;
inline constexpr double chain_a_n2_s3 = 0.234072907221284090497;
inline constexpr double chain_a_n3_s4 = 0.161294374330568217097;

// --- positive-quadrant lattice Dirichlet sums ---------------------------------
inline constexpr double S2_2 = 0.424379776211846839371;    // zeta(2)*beta(2) - zeta(4)
inline constexpr double S2_1p75 = 0.625775184122222424704;
inline constexpr double S2_2p25 = 0.309404052392988944545;

// --- half-plane Poisson integral of Xi(t)/(t^2+1/4) ---------------------------
inline constexpr double fP_0_0p02 = 1.91158558490803429067;
inline constexpr double fP_0_0p1 = 1.65527654567393752651;
inline constexpr double fP_0_0p5 = 0.98909344080103110723;
inline constexpr double fP_0_1 = 0.656315920599714577605;
inline constexpr double fP_0_2 = 0.390621920256849045882;
inline constexpr double fP_0_4 = 0.214363373239646907373;
inline constexpr double fP_1_0p02 = 0.397950760631695134149;
inline constexpr double fP_1_0p1 = 0.429906062406451695169;
inline constexpr double fP_1_0p5 = 0.489201601695838792863;
inline constexpr double fP_1_1 = 0.4512832809072948572;
inline constexpr double fP_1_2 = 0.335524837947547577459;
inline constexpr double fP_1_4 = 0.203954374691045206661;
inline constexpr double fP_2_1 = 0.230024637639766423431;
inline constexpr double fP_2_2 = 0.234820772017692444759;
inline constexpr double fP_2_4 = 0.177899624149987172327;
inline constexpr double fP_1_0p004 = 0.390519682425319031087;
inline constexpr double fP_1_0p001 = 0.389086488050600434437;
inline constexpr double fP_1_0p0001 = 0.388654061521069245424;
inline constexpr double fP_0p2_1 = 0.644674933010020306953;
inline constexpr double fP_2pi_2pi = 0.0738099339031076127557;
inline constexpr double fP_g1_0p0001 = 4.732293594e-7;   // at the first zero height
inline constexpr double fP_10_0p0001 = 3.797120232e-4;   // away from zeros

// boundary values f(x) = Xi(x)/(x^2+1/4)
inline constexpr double f_0 = 1.98848311275325643965;  // Xi(0)/0.25
inline constexpr double f_1 = 0.388605943736786793378;
inline constexpr double f_10 = 3.78731673924545478544e-4;

// measured boundary-gap ratios |u(x,0.02)-g(x)| / |g(x)| for the red criterion
inline constexpr double boundary_ratio_x0 = 0.038671451;
inline constexpr double boundary_ratio_x1 = 0.024047025;

// --- alternate form of u(0, y) -------------------------------------------------
inline constexpr double u2_0_1 = 0.574271294715824485799;  // n=2, y=1
inline constexpr double u2_0_2 = 0.217873171817561576001;  // n=2, y=2

}  // namespace ref
