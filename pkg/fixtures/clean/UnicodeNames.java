class UnicodeNames
{
    int café = 1;
    String über = "umlaut";
    double π = 3.14159;
    long $dollar = 2;
    int _under = 3;
}
