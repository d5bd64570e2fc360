pub mod bessel_cases;
