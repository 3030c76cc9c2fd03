class Literals
{
    int dec = 1_000_000;
    int hex = 0xCAFE_BABE;
    int bin = 0b1010_0101;
    int oct = 0755;
    long big = 9_000_000_000L;
    long hexl = 0x7fffL;
    float f1 = 1.5f;
    float f2 = .25F;
    double d1 = 6.022e23;
    double d2 = 1.6E-19d;
    double d3 = 42.;
    double d4 = 7D;
    char c1 = 'a';
    char c2 = '\n';
    char c3 = '\u0041';
    char c4 = '\'';
    String s1 = "hello";
    String s2 = "tab\tnewline\nquote\"";
    String s3 = "";
    boolean t = true;
    boolean f = false;
    Object nothing = null;
}
