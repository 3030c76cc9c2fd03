/**
 * Javadoc header with details.
 *
 * @author nobody
 */
class Comments
{
    // a line comment
    int a = 1; // trailing comment

    /* inline block */ int b = 2;

    /*
     * multi line
     * block body
     */
    int c = 3;
}
