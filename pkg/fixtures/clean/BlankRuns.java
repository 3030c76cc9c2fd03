class BlankRuns
{
    int first = 1;


    int second = 2;

    int third = 3;
}
