int x;

void main()
{
#pragma omp parallel
    {
        int y;
        y = 0;
#pragma omp single
        { x = 1; }
        y = 2;
#pragma omp single
        { x = 3; }
        y = 4;
    }
}
